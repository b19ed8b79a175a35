//! Domain types shared across the tracker: boxes, detections, tracklets
//! and feature vectors, plus the geometric primitives built on them.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TypeError {
    #[error("bbox has non-positive size: width={width}, height={height}")]
    NonPositiveBox { width: f64, height: f64 },
    #[error("bbox has non-finite coordinates")]
    NonFiniteBox,
    #[error("confidence {0} outside [0,1]")]
    BadConfidence(f64),
}

/// Axis-aligned bounding box in (left, top, width, height) form,
/// matching the MOT Challenge file convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
}

impl BBox {
    /// Builds a box, rejecting zero-area or non-finite inputs.
    pub fn new(left: f64, top: f64, width: f64, height: f64) -> Result<Self, TypeError> {
        if !(left.is_finite() && top.is_finite() && width.is_finite() && height.is_finite()) {
            return Err(TypeError::NonFiniteBox);
        }
        if width <= 0.0 || height <= 0.0 {
            return Err(TypeError::NonPositiveBox { width, height });
        }
        Ok(Self { left, top, width, height })
    }

    pub fn right(&self) -> f64 {
        self.left + self.width
    }

    pub fn bottom(&self) -> f64 {
        self.top + self.height
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    /// Center point (x, y).
    pub fn center(&self) -> (f64, f64) {
        (self.left + self.width / 2.0, self.top + self.height / 2.0)
    }

    /// The same box translated by (dx, dy); size unchanged.
    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        Self { left: self.left + dx, top: self.top + dy, ..*self }
    }
}

/// Intersection-over-union of two boxes. Symmetric, in [0, 1].
pub fn iou(a: &BBox, b: &BBox) -> f64 {
    let ix = (a.right().min(b.right()) - a.left.max(b.left)).max(0.0);
    let iy = (a.bottom().min(b.bottom()) - a.top.max(b.top)).max(0.0);
    let inter = ix * iy;
    let union = a.area() + b.area() - inter;
    inter / union
}

/// A per-frame detector output box with confidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub bbox: BBox,
    pub confidence: f64,
    pub frame: u64,
}

impl Detection {
    pub fn new(bbox: BBox, confidence: f64, frame: u64) -> Result<Self, TypeError> {
        if !(0.0..=1.0).contains(&confidence) || !confidence.is_finite() {
            return Err(TypeError::BadConfidence(confidence));
        }
        Ok(Self { bbox, confidence, frame })
    }
}

/// D-dimensional appearance embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub values: Vec<f64>,
}

impl FeatureVector {
    pub fn new(values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self { values }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

/// Lifecycle state of a tracklet. A `Lost(n)` tracklet has been unmatched
/// for n consecutive frames; past the k-frame window it becomes `Dead`
/// and never re-activates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackletState {
    Active,
    Lost(u32),
    Dead,
}

/// One identity: its box history over recent frames, its last appearance
/// feature, and its lifecycle state.
#[derive(Debug, Clone)]
pub struct Tracklet {
    pub id: u64,
    pub history: Vec<(u64, BBox)>,
    pub last_feature: FeatureVector,
    pub last_seen: u64,
    pub state: TrackletState,
}

impl Tracklet {
    pub fn new(id: u64, frame: u64, bbox: BBox, feature: FeatureVector) -> Self {
        Self {
            id,
            history: vec![(frame, bbox)],
            last_feature: feature,
            last_seen: frame,
            state: TrackletState::Active,
        }
    }

    /// Most recent known box.
    pub fn last_bbox(&self) -> BBox {
        self.history.last().expect("tracklet history never empty").1
    }

    /// Appends a sighting, keeping at most `k` history entries.
    pub fn push_sighting(&mut self, frame: u64, bbox: BBox, feature: FeatureVector, k: usize) {
        debug_assert!(frame > self.last_seen);
        self.history.push((frame, bbox));
        if self.history.len() > k {
            let excess = self.history.len() - k;
            self.history.drain(..excess);
        }
        self.last_feature = feature;
        self.last_seen = frame;
        self.state = TrackletState::Active;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn bx(l: f64, t: f64, w: f64, h: f64) -> BBox {
        BBox::new(l, t, w, h).unwrap()
    }

    #[test]
    fn iou_identity() {
        let a = bx(0.0, 0.0, 10.0, 10.0);
        assert_eq!(iou(&a, &a), 1.0);
    }

    #[test]
    fn iou_disjoint() {
        let a = bx(0.0, 0.0, 10.0, 10.0);
        let b = bx(20.0, 20.0, 10.0, 10.0);
        assert_eq!(iou(&a, &b), 0.0);
    }

    #[test]
    fn iou_partial_overlap() {
        // 2x2 boxes offset by 1 in x: inter 2, union 6.
        let a = bx(0.0, 0.0, 2.0, 2.0);
        let b = bx(1.0, 0.0, 2.0, 2.0);
        assert_abs_diff_eq!(iou(&a, &b), 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn centers() {
        assert_eq!(bx(0.0, 0.0, 10.0, 10.0).center(), (5.0, 5.0));
        assert_eq!(bx(2.0, 4.0, 6.0, 8.0).center(), (5.0, 8.0));
        assert_eq!(bx(-3.0, -3.0, 6.0, 6.0).center(), (0.0, 0.0));
    }

    #[test]
    fn degenerate_box_rejected() {
        assert!(BBox::new(0.0, 0.0, 0.0, 5.0).is_err());
        assert!(BBox::new(0.0, 0.0, 5.0, -1.0).is_err());
        assert!(BBox::new(f64::NAN, 0.0, 5.0, 5.0).is_err());
    }

    /// Counting oracle: rasterize both boxes on a fine subgrid and count
    /// cells. Exact for integer-corner boxes when the grid aligns.
    fn iou_raster_oracle(a: &BBox, b: &BBox) -> f64 {
        let min_x = a.left.min(b.left) as i64;
        let max_x = a.right().max(b.right()).ceil() as i64;
        let min_y = a.top.min(b.top) as i64;
        let max_y = a.bottom().max(b.bottom()).ceil() as i64;
        let mut inter = 0u64;
        let mut union = 0u64;
        for y in min_y..max_y {
            for x in min_x..max_x {
                let cx = x as f64 + 0.5;
                let cy = y as f64 + 0.5;
                let in_a = cx > a.left && cx < a.right() && cy > a.top && cy < a.bottom();
                let in_b = cx > b.left && cx < b.right() && cy > b.top && cy < b.bottom();
                if in_a && in_b {
                    inter += 1;
                }
                if in_a || in_b {
                    union += 1;
                }
            }
        }
        if union == 0 {
            0.0
        } else {
            inter as f64 / union as f64
        }
    }

    proptest! {
        #[test]
        fn iou_symmetric(
            l1 in -20i32..20, t1 in -20i32..20, w1 in 1i32..15, h1 in 1i32..15,
            l2 in -20i32..20, t2 in -20i32..20, w2 in 1i32..15, h2 in 1i32..15,
        ) {
            let a = bx(l1 as f64, t1 as f64, w1 as f64, h1 as f64);
            let b = bx(l2 as f64, t2 as f64, w2 as f64, h2 as f64);
            let ab = iou(&a, &b);
            prop_assert!((ab - iou(&b, &a)).abs() < 1e-15);
            prop_assert!((0.0..=1.0).contains(&ab));
            prop_assert!((ab - iou_raster_oracle(&a, &b)).abs() < 1e-6);
        }

        #[test]
        fn iou_self_is_one(l in -20i32..20, t in -20i32..20, w in 1i32..15, h in 1i32..15) {
            let a = bx(l as f64, t as f64, w as f64, h as f64);
            prop_assert_eq!(iou(&a, &a), 1.0);
        }
    }
}
