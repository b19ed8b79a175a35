//! Tracklet-predicting adaptive graph tracker.
//!
//! An association-only multi-object tracker: tracklet motion is predicted
//! with pyramidal Lucas-Kanade optical flow, appearance features are
//! re-extracted in the current frame with ROI Align, location and
//! appearance cues are fused by an adaptive graph neural network, and
//! detections are matched to tracklets through a margin-augmented
//! Hungarian assignment. Training uses a balanced MSE loss under Adam
//! with a cosine-annealed learning rate. Evaluation follows the CLEAR
//! MOT conventions (MOTA, IDF1, MT, ML, FP, FN, IDSW).
//!
//! The crate takes detections and feature maps as inputs; it runs no
//! detector or convolutional backbone.

pub mod agnn;
pub mod assoc;
pub mod flow;
pub mod io;
pub mod loss;
pub mod moteval;
pub mod roifeat;
pub mod synth;
pub mod tracker;
pub mod train;
pub mod types;

pub use types::{BBox, Detection, FeatureVector, Tracklet, TrackletState};

// The book's code blocks run as doc-tests, so the guide cannot drift
// from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/flow.md")]
    mod flow {}
    #[doc = include_str!("../../../book/src/features.md")]
    mod features {}
    #[doc = include_str!("../../../book/src/agnn.md")]
    mod agnn {}
    #[doc = include_str!("../../../book/src/training.md")]
    mod training {}
    #[doc = include_str!("../../../book/src/association.md")]
    mod association {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/synthetic.md")]
    mod synthetic {}
}
