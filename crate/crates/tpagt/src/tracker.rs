//! Per-frame orchestration: flow-predict tracklet boxes, re-extract
//! features in the current frame, run the graph association, and keep the
//! tracklet store's k-frame lifecycle.

use crate::agnn;
use crate::assoc::{self, DetectionOutcome};
use crate::flow::{self, FlowConfig, GrayFrame};
use crate::roifeat::{self, FeatureMap};
use crate::train::ModelParams;
use crate::types::{BBox, Detection, FeatureVector, Tracklet, TrackletState};
use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TrackError {
    #[error("frames/maps/detections lengths differ: {frames}/{maps}/{dets}")]
    InputLengthMismatch { frames: usize, maps: usize, dets: usize },
    #[error(transparent)]
    Assoc(#[from] assoc::AssocError),
    #[error(transparent)]
    Agnn(#[from] agnn::AgnnError),
    #[error(transparent)]
    Roi(#[from] roifeat::RoiError),
}

#[derive(Debug, Clone)]
pub struct TrackerConfig {
    /// Lost tracklets stay matchable for this many frames.
    pub k: u32,
    pub margin: f64,
    /// Re-extract tracklet features at predicted boxes in the current
    /// frame; when false the stored features from the last sighting are
    /// reused.
    pub realign_features: bool,
    /// When false a zero-motion predictor replaces optical flow.
    pub use_flow: bool,
    pub flow: FlowConfig,
    pub feature_dim: usize,
    pub min_conf: f64,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        Self {
            k: 10,
            margin: 0.2,
            realign_features: true,
            use_flow: true,
            flow: FlowConfig::default(),
            feature_dim: 256,
            min_conf: 0.0,
        }
    }
}

/// Active and lost tracklets; dead ones are dropped. Ids never repeat.
#[derive(Debug, Default)]
pub struct TrackletStore {
    pub tracklets: Vec<Tracklet>,
    pub max_id: u64,
}

impl TrackletStore {
    pub fn live_indices(&self) -> Vec<usize> {
        self.tracklets
            .iter()
            .enumerate()
            .filter(|(_, t)| t.state != TrackletState::Dead)
            .map(|(i, _)| i)
            .collect()
    }
}

fn age_tracklet(t: &mut Tracklet, k: u32) {
    t.state = match t.state {
        TrackletState::Active => TrackletState::Lost(1),
        TrackletState::Lost(n) if n + 1 > k => TrackletState::Dead,
        TrackletState::Lost(n) => TrackletState::Lost(n + 1),
        TrackletState::Dead => TrackletState::Dead,
    };
}

/// One end-to-end frame pass. Returns the id assigned to each retained
/// detection, in input order.
#[allow(clippy::too_many_arguments)]
pub fn step(
    prev_frame: Option<&GrayFrame>,
    curr_frame: &GrayFrame,
    curr_map: &FeatureMap,
    frame: u64,
    detections: &[Detection],
    store: &mut TrackletStore,
    params: &ModelParams,
    cfg: &TrackerConfig,
) -> Result<Vec<(Detection, u64)>, TrackError> {
    let dets: Vec<Detection> =
        detections.iter().filter(|d| d.confidence >= cfg.min_conf).cloned().collect();
    let live = store.live_indices();

    if dets.is_empty() {
        for &i in &live {
            age_tracklet(&mut store.tracklets[i], cfg.k);
        }
        return Ok(Vec::new());
    }

    // Predicted current-frame boxes: flow for tracklets seen in the
    // immediately preceding frame, last-known box otherwise.
    let mut predicted = Vec::with_capacity(live.len());
    let mut flow_ok = Vec::with_capacity(live.len());
    for &i in &live {
        let t = &store.tracklets[i];
        let b = t.last_bbox();
        let (pred, ok) = if cfg.use_flow && t.last_seen + 1 == frame {
            match prev_frame {
                Some(pf) => match flow::predict_tracklet_bbox(pf, curr_frame, &b, &cfg.flow) {
                    Ok(r) => r,
                    Err(_) => (b, false),
                },
                None => (b, false),
            }
        } else {
            (b, false)
        };
        predicted.push(pred);
        flow_ok.push(ok);
    }

    let det_boxes: Vec<BBox> = dets.iter().map(|d| d.bbox).collect();
    let det_feats = roifeat::extract_features(curr_map, &det_boxes, &params.embed)?;

    let outcome = if live.is_empty() {
        let empty = Array2::zeros((dets.len(), 0));
        assoc::match_detections(&empty, cfg.margin, store.max_id + 1, 0)?
    } else {
        let dim = params.embed.dim;
        let stored = |(r, c): (usize, usize)| store.tracklets[live[r]].last_feature.values[c];
        let trk_feats = if cfg.realign_features {
            // Re-extract along the flow for tracklets seen in the previous
            // frame. A lost tracklet's predicted box is stale, and a fresh
            // one whose flow did not converge sits at its unmoved box; in
            // both cases re-extraction would sample background, so the
            // stored features are kept.
            let realigned = roifeat::extract_features(curr_map, &predicted, &params.embed)?;
            Array2::from_shape_fn((live.len(), dim), |(r, c)| {
                let fresh = store.tracklets[live[r]].last_seen + 1 == frame;
                if fresh && (flow_ok[r] || !cfg.use_flow) {
                    realigned[(r, c)]
                } else {
                    stored((r, c))
                }
            })
        } else {
            Array2::from_shape_fn((live.len(), dim), stored)
        };
        let mut iou = Array2::zeros((dets.len(), live.len()));
        for (r, db) in det_boxes.iter().enumerate() {
            for (c, tb) in predicted.iter().enumerate() {
                iou[(r, c)] = crate::types::iou(db, tb);
            }
        }
        let (s_out, _) = agnn::forward(&det_feats, &trk_feats, &iou, &params.agnn)?;
        assoc::match_detections(&s_out, cfg.margin, store.max_id + 1, live.len())?
    };

    let mut results = Vec::with_capacity(dets.len());
    let mut matched_live = vec![false; live.len()];
    for (di, det) in dets.iter().enumerate() {
        let feature = FeatureVector::new(det_feats.row(di).to_vec());
        match outcome.detections[di] {
            DetectionOutcome::Matched(col) => {
                matched_live[col] = true;
                let t = &mut store.tracklets[live[col]];
                t.push_sighting(frame, det.bbox, feature, cfg.k as usize);
                results.push((*det, t.id));
            }
            DetectionOutcome::NewObject(id) => {
                store.tracklets.push(Tracklet::new(id, frame, det.bbox, feature));
                store.max_id = store.max_id.max(id);
                results.push((*det, id));
            }
        }
    }
    for (col, &i) in live.iter().enumerate() {
        if !matched_live[col] {
            age_tracklet(&mut store.tracklets[i], cfg.k);
        }
    }
    Ok(results)
}

/// Output row of a tracked sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackRow {
    pub frame: u64,
    pub id: u64,
    pub bbox: BBox,
    pub confidence: f64,
}

/// Folds [`step`] over an aligned sequence of frames, maps and per-frame
/// detection lists. Frames are numbered from 1.
pub fn run_sequence(
    frames: &[GrayFrame],
    maps: &[FeatureMap],
    detections_per_frame: &[Vec<Detection>],
    params: &ModelParams,
    cfg: &TrackerConfig,
) -> Result<Vec<TrackRow>, TrackError> {
    if frames.len() != maps.len() || frames.len() != detections_per_frame.len() {
        return Err(TrackError::InputLengthMismatch {
            frames: frames.len(),
            maps: maps.len(),
            dets: detections_per_frame.len(),
        });
    }
    let mut store = TrackletStore::default();
    let mut rows = Vec::new();
    for (idx, ((frame_img, map), dets)) in
        frames.iter().zip(maps).zip(detections_per_frame).enumerate()
    {
        let frame = idx as u64 + 1;
        let prev = if idx > 0 { Some(&frames[idx - 1]) } else { None };
        let assigned = step(prev, frame_img, map, frame, dets, &mut store, params, cfg)?;
        for (det, id) in assigned {
            rows.push(TrackRow { frame, id, bbox: det.bbox, confidence: det.confidence });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn test_params(dim: usize) -> ModelParams {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        ModelParams::init(1, 7, dim, &mut rng)
    }

    fn fast_cfg() -> TrackerConfig {
        TrackerConfig {
            feature_dim: 8,
            flow: FlowConfig { window: 31, ..FlowConfig::default() },
            ..TrackerConfig::default()
        }
    }

    fn det(l: f64, t: f64, w: f64, h: f64, frame: u64) -> Detection {
        Detection::new(BBox::new(l, t, w, h).unwrap(), 0.95, frame).unwrap()
    }

    #[test]
    fn first_frame_assigns_fresh_ids() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let frame = synth::sinusoid_texture(128, 96, &mut rng);
        let map = FeatureMap::from_gray(&frame);
        let dets =
            vec![det(5.0, 5.0, 10.0, 10.0, 1), det(40.0, 40.0, 10.0, 10.0, 1), det(80.0, 20.0, 10.0, 10.0, 1)];
        let mut store = TrackletStore::default();
        let out = step(None, &frame, &map, 1, &dets, &mut store, &test_params(8), &fast_cfg())
            .unwrap();
        let ids: Vec<u64> = out.iter().map(|(_, id)| *id).collect();
        assert_eq!(ids, vec![1, 2, 3]);
        assert_eq!(store.max_id, 3);
    }

    #[test]
    fn static_scene_keeps_ids() {
        let s = synth::SynthScenario::new(
            160,
            120,
            3,
            vec![
                synth::ObjectSpec {
                    start: BBox::new(20.0, 20.0, 24.0, 24.0).unwrap(),
                    velocity: (0.0, 0.0),
                    texture_seed: 1,
                    occlusion: None,
                },
                synth::ObjectSpec {
                    start: BBox::new(100.0, 70.0, 24.0, 24.0).unwrap(),
                    velocity: (0.0, 0.0),
                    texture_seed: 2,
                    occlusion: None,
                },
            ],
        );
        let mut s = s;
        s.det_jitter_sigma = 0.0;
        s.det_drop_rate = 0.0;
        let data = synth::gen_scenario(&s, 5).unwrap();
        let dets: Vec<Vec<Detection>> = (1..=3u64)
            .map(|f| {
                data.dets
                    .iter()
                    .filter(|d| d.frame == f)
                    .map(|d| Detection::new(d.bbox, d.confidence, f).unwrap())
                    .collect()
            })
            .collect();
        let rows =
            run_sequence(&data.frames, &data.maps, &dets, &test_params(8), &fast_cfg()).unwrap();
        // Each object keeps one id across all frames.
        for frame in 1..=3u64 {
            let mut ids: Vec<u64> =
                rows.iter().filter(|r| r.frame == frame).map(|r| r.id).collect();
            ids.sort_unstable();
            assert_eq!(ids, vec![1, 2], "frame {frame}");
        }
    }

    #[test]
    fn flow_toggle_matches_on_static_scene() {
        let mut s = synth::SynthScenario::new(
            160,
            120,
            3,
            vec![synth::ObjectSpec {
                start: BBox::new(50.0, 40.0, 24.0, 24.0).unwrap(),
                velocity: (0.0, 0.0),
                texture_seed: 3,
                occlusion: None,
            }],
        );
        s.det_jitter_sigma = 0.0;
        s.det_drop_rate = 0.0;
        let data = synth::gen_scenario(&s, 8).unwrap();
        let dets: Vec<Vec<Detection>> = (1..=3u64)
            .map(|f| {
                data.dets
                    .iter()
                    .filter(|d| d.frame == f)
                    .map(|d| Detection::new(d.bbox, d.confidence, f).unwrap())
                    .collect()
            })
            .collect();
        let with_flow =
            run_sequence(&data.frames, &data.maps, &dets, &test_params(8), &fast_cfg()).unwrap();
        let cfg = TrackerConfig { use_flow: false, ..fast_cfg() };
        let without =
            run_sequence(&data.frames, &data.maps, &dets, &test_params(8), &cfg).unwrap();
        assert_eq!(with_flow, without);
    }

    #[test]
    fn lost_past_k_frames_gets_new_id() {
        // One object, detected on frame 1, absent k+1 frames, seen again.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let frame = synth::sinusoid_texture(128, 96, &mut rng);
        let map = FeatureMap::from_gray(&frame);
        let cfg = TrackerConfig { k: 3, use_flow: false, ..fast_cfg() };
        let params = test_params(8);
        let mut store = TrackletStore::default();
        let d1 = vec![det(30.0, 30.0, 16.0, 16.0, 1)];
        let out = step(None, &frame, &map, 1, &d1, &mut store, &params, &cfg).unwrap();
        assert_eq!(out[0].1, 1);
        for f in 2..=5u64 {
            step(Some(&frame), &frame, &map, f, &[], &mut store, &params, &cfg).unwrap();
        }
        // Absent frames 2..=5 (4 = k+1 misses): tracklet is dead.
        assert_eq!(store.tracklets[0].state, TrackletState::Dead);
        let d6 = vec![det(30.0, 30.0, 16.0, 16.0, 6)];
        let out = step(Some(&frame), &frame, &map, 6, &d6, &mut store, &params, &cfg).unwrap();
        assert_eq!(out[0].1, 2);
    }

    #[test]
    fn lost_exactly_k_frames_still_matchable() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let frame = synth::sinusoid_texture(128, 96, &mut rng);
        let map = FeatureMap::from_gray(&frame);
        let cfg = TrackerConfig { k: 3, use_flow: false, ..fast_cfg() };
        let params = test_params(8);
        let mut store = TrackletStore::default();
        let d1 = vec![det(30.0, 30.0, 16.0, 16.0, 1)];
        step(None, &frame, &map, 1, &d1, &mut store, &params, &cfg).unwrap();
        for f in 2..=4u64 {
            step(Some(&frame), &frame, &map, f, &[], &mut store, &params, &cfg).unwrap();
        }
        // Exactly k = 3 misses: still lost, still matchable.
        assert_eq!(store.tracklets[0].state, TrackletState::Lost(3));
        let d5 = vec![det(30.0, 30.0, 16.0, 16.0, 5)];
        let out = step(Some(&frame), &frame, &map, 5, &d5, &mut store, &params, &cfg).unwrap();
        assert_eq!(out[0].1, 1, "same identity resumed within the window");
    }

    #[test]
    fn run_sequence_length_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let frame = synth::sinusoid_texture(64, 64, &mut rng);
        let map = FeatureMap::from_gray(&frame);
        let err = run_sequence(
            &[frame],
            &[map],
            &[vec![], vec![]],
            &test_params(8),
            &fast_cfg(),
        );
        assert!(matches!(err, Err(TrackError::InputLengthMismatch { .. })));
    }

    #[test]
    fn empty_sequence_empty_output() {
        let rows = run_sequence(&[], &[], &[], &test_params(8), &fast_cfg()).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn ids_never_reused() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let frame = synth::sinusoid_texture(128, 96, &mut rng);
        let map = FeatureMap::from_gray(&frame);
        let cfg = TrackerConfig { k: 1, use_flow: false, ..fast_cfg() };
        let params = test_params(8);
        let mut store = TrackletStore::default();
        let mut seen = std::collections::HashSet::new();
        for f in 1..=8u64 {
            // Alternate detection presence to churn the lifecycle.
            let dets = if f % 3 == 0 {
                vec![]
            } else {
                vec![det(20.0 + (f % 2) as f64 * 60.0, 30.0, 16.0, 16.0, f)]
            };
            let out =
                step(Some(&frame), &frame, &map, f, &dets, &mut store, &params, &cfg).unwrap();
            for (_, id) in out {
                seen.insert(id);
            }
        }
        // max_id covers every id ever issued exactly once.
        assert!(seen.len() <= store.max_id as usize);
    }
}
