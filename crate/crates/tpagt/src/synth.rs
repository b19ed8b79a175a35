//! Synthetic scenario generation: textured rectangles with linear motion
//! over a static background, with ground truth, jittered detections and
//! 1-channel feature maps. A desk-scale stand-in for benchmark data.

use crate::flow::GrayFrame;
use crate::roifeat::FeatureMap;
use crate::types::BBox;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynthError {
    #[error("scenario infeasible: {0}")]
    ScenarioInfeasible(String),
}

/// Band-limited random texture: a sum of sinusoids, evaluable at any
/// real coordinate so frames can be shifted by exact sub-pixel amounts.
#[derive(Debug, Clone)]
pub struct SinusoidField {
    components: Vec<(f64, f64, f64, f64)>, // (amplitude, kx, ky, phase)
    /// Per-component amplitude-modulation rate (radians per frame) and
    /// phase; rates are all zero unless shimmer is enabled, in which case
    /// component contrasts oscillate and appearance evolves over time.
    /// Modulating amplitude rather than phase keeps the spatial structure
    /// anchored, so the apparent motion stays the true motion.
    mod_rates: Vec<f64>,
    mod_phases: Vec<f64>,
}

impl SinusoidField {
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        // Low frequencies dominate so coarse pyramid levels keep an
        // unambiguous structure; a few weak high-frequency components
        // provide fine-level detail.
        let components = (0..12)
            .map(|i| {
                let angle = rng.gen_range(0.0..std::f64::consts::TAU);
                let (freq, amp) = if i < 8 {
                    (rng.gen_range(0.015..0.055), rng.gen_range(0.5..1.0))
                } else {
                    (rng.gen_range(0.055..0.25), rng.gen_range(0.02..0.06))
                };
                (
                    amp,
                    freq * angle.cos(),
                    freq * angle.sin(),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        Self { components, mod_rates: vec![0.0; 12], mod_phases: vec![0.0; 12] }
    }

    /// Fine-scale variant for object patches: wavelengths of a few pixels
    /// up to a couple dozen, so small boxes carry distinctive detail.
    pub fn random_detail<R: Rng>(rng: &mut R) -> Self {
        Self::random_band(0.25, 0.9, rng)
    }

    /// Texture restricted to a frequency band (radians per pixel over TAU,
    /// i.e. cycles per pixel).
    pub fn random_band<R: Rng>(lo: f64, hi: f64, rng: &mut R) -> Self {
        let components = (0..12)
            .map(|_| {
                let angle = rng.gen_range(0.0..std::f64::consts::TAU);
                let freq = rng.gen_range(lo..hi);
                (
                    rng.gen_range(0.5..1.0),
                    freq * angle.cos(),
                    freq * angle.sin(),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        Self { components, mod_rates: vec![0.0; 12], mod_phases: vec![0.0; 12] }
    }

    /// Gives each component a random amplitude-modulation rate up to
    /// `max_rate` radians per frame, so the texture's appearance changes
    /// over time without its spatial structure moving.
    pub fn set_shimmer<R: Rng>(&mut self, max_rate: f64, rng: &mut R) {
        for (r, p) in self.mod_rates.iter_mut().zip(self.mod_phases.iter_mut()) {
            *r = rng.gen_range(-max_rate..=max_rate);
            *p = rng.gen_range(0.0..std::f64::consts::TAU);
        }
    }

    /// Intensity in [0, 1] at a real coordinate.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.eval_t(x, y, 0.0)
    }

    /// Intensity at a real coordinate and time (frames).
    pub fn eval_t(&self, x: f64, y: f64, t: f64) -> f64 {
        let total_amp: f64 = self.components.iter().map(|c| c.0).sum();
        let s: f64 = self
            .components
            .iter()
            .zip(self.mod_rates.iter().zip(&self.mod_phases))
            .map(|((a, kx, ky, phase), (rate, mp))| {
                let gain = 0.55 + 0.45 * (rate * t + mp).sin();
                a * gain * (kx * x + ky * y + phase).sin()
            })
            .sum();
        0.5 + 0.5 * s / total_amp
    }
}

/// Random textured frame.
pub fn sinusoid_texture<R: Rng>(width: u32, height: u32, rng: &mut R) -> GrayFrame {
    let field = SinusoidField::random(rng);
    render_field(&field, width, height, 0.0, 0.0)
}

fn render_field(field: &SinusoidField, width: u32, height: u32, ox: f64, oy: f64) -> GrayFrame {
    let data = (0..width as usize * height as usize)
        .map(|i| {
            let x = (i % width as usize) as f64;
            let y = (i / width as usize) as f64;
            field.eval(x - ox, y - oy)
        })
        .collect();
    GrayFrame::new(width, height, data).unwrap()
}

/// A frame pair where the whole scene translates by exactly (dx, dy).
pub fn shifted_pair<R: Rng>(
    width: u32,
    height: u32,
    dx: f64,
    dy: f64,
    rng: &mut R,
) -> (GrayFrame, GrayFrame) {
    let field = SinusoidField::random(rng);
    (render_field(&field, width, height, 0.0, 0.0), render_field(&field, width, height, dx, dy))
}

/// One synthetic object: starting box, constant velocity, texture seed,
/// and an optional inclusive occlusion interval in frame indices.
#[derive(Debug, Clone)]
pub struct ObjectSpec {
    pub start: BBox,
    pub velocity: (f64, f64),
    pub texture_seed: u64,
    pub occlusion: Option<(u64, u64)>,
}

/// Scenario description. Frames are numbered 1..=frames.
#[derive(Debug, Clone)]
pub struct SynthScenario {
    pub width: u32,
    pub height: u32,
    pub frames: u64,
    pub objects: Vec<ObjectSpec>,
    pub det_jitter_sigma: f64,
    pub det_drop_rate: f64,
    /// Appearance change per unit speed: each object's texture phases
    /// drift up to `shimmer * |velocity|` radians per frame. Zero keeps
    /// appearance rigid.
    pub shimmer: f64,
    /// Spatial frequency band (cycles per pixel) of object textures. The
    /// default fine band maximizes appearance contrast between small boxes;
    /// coarser bands survive pyramid smoothing and suit fast motion.
    pub object_freq: (f64, f64),
}

impl SynthScenario {
    pub fn new(width: u32, height: u32, frames: u64, objects: Vec<ObjectSpec>) -> Self {
        Self {
            width,
            height,
            frames,
            objects,
            det_jitter_sigma: 1.0,
            det_drop_rate: 0.02,
            shimmer: 0.0,
            object_freq: (0.25, 0.9),
        }
    }
}

/// Ground-truth row. Occluded sightings keep the extrapolated box but are
/// flagged invisible.
#[derive(Debug, Clone)]
pub struct GtEntry {
    pub frame: u64,
    pub id: u64,
    pub bbox: BBox,
    pub visible: bool,
}

/// A detection with the source identity retained for label construction.
#[derive(Debug, Clone)]
pub struct DetEntry {
    pub frame: u64,
    pub source_id: u64,
    pub bbox: BBox,
    pub confidence: f64,
}

/// Generated fixture: frames, feature maps, ground truth and detections.
pub struct SynthData {
    pub frames: Vec<GrayFrame>,
    pub maps: Vec<FeatureMap>,
    pub gt: Vec<GtEntry>,
    pub dets: Vec<DetEntry>,
    pub width: u32,
    pub height: u32,
    pub frame_count: u64,
}

fn object_box_at(obj: &ObjectSpec, frame: u64) -> BBox {
    let t = (frame - 1) as f64;
    obj.start.translated(obj.velocity.0 * t, obj.velocity.1 * t)
}

fn occluded_at(obj: &ObjectSpec, frame: u64) -> bool {
    matches!(obj.occlusion, Some((a, b)) if frame >= a && frame <= b)
}

/// Renders the scenario deterministically from the seed.
pub fn gen_scenario(scenario: &SynthScenario, seed: u64) -> Result<SynthData, SynthError> {
    let w = scenario.width as f64;
    let h = scenario.height as f64;
    for (idx, obj) in scenario.objects.iter().enumerate() {
        for frame in 1..=scenario.frames {
            if occluded_at(obj, frame) {
                continue;
            }
            let b = object_box_at(obj, frame);
            if b.left < 1.0 || b.top < 1.0 || b.right() > w - 1.0 || b.bottom() > h - 1.0 {
                return Err(SynthError::ScenarioInfeasible(format!(
                    "object {idx} leaves the image at frame {frame} without occlusion"
                )));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let background = {
        let field = SinusoidField::random(&mut rng);
        // Low-contrast static background.
        let data = (0..scenario.width as usize * scenario.height as usize)
            .map(|i| {
                let x = (i % scenario.width as usize) as f64;
                let y = (i / scenario.width as usize) as f64;
                0.45 + 0.1 * (field.eval(x, y) - 0.5)
            })
            .collect::<Vec<_>>();
        GrayFrame::new(scenario.width, scenario.height, data).unwrap()
    };
    let textures: Vec<SinusoidField> = scenario
        .objects
        .iter()
        .map(|o| {
            let mut trng = ChaCha8Rng::seed_from_u64(seed ^ o.texture_seed);
            let (lo, hi) = scenario.object_freq;
            let mut tex = SinusoidField::random_band(lo, hi, &mut trng);
            if scenario.shimmer > 0.0 {
                let speed = o.velocity.0.hypot(o.velocity.1);
                tex.set_shimmer(scenario.shimmer * speed, &mut trng);
            }
            tex
        })
        .collect();

    let mut frames = Vec::with_capacity(scenario.frames as usize);
    let mut gt = Vec::new();
    let mut dets = Vec::new();
    for frame in 1..=scenario.frames {
        let mut img = background.clone();
        for (idx, obj) in scenario.objects.iter().enumerate() {
            let b = object_box_at(obj, frame);
            let visible = !occluded_at(obj, frame);
            gt.push(GtEntry { frame, id: idx as u64 + 1, bbox: b, visible });
            if !visible {
                continue;
            }
            let x0 = b.left.max(0.0) as usize;
            let y0 = b.top.max(0.0) as usize;
            let x1 = (b.right().ceil() as usize).min(scenario.width as usize);
            let y1 = (b.bottom().ceil() as usize).min(scenario.height as usize);
            for y in y0..y1 {
                for x in x0..x1 {
                    // Texture in object-local coordinates moves with it.
                    img.data[y * scenario.width as usize + x] = textures[idx].eval_t(
                        x as f64 - b.left,
                        y as f64 - b.top,
                        (frame - 1) as f64,
                    );
                }
            }
            if rng.gen_range(0.0..1.0) >= scenario.det_drop_rate {
                let jitter = |rng: &mut ChaCha8Rng| {
                    // Box-Muller keeps the generator dependency-free here.
                    let u1: f64 = rng.gen_range(1e-12..1.0);
                    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                    (-2.0 * u1.ln()).sqrt() * u2.cos()
                };
                let dx = scenario.det_jitter_sigma * jitter(&mut rng);
                let dy = scenario.det_jitter_sigma * jitter(&mut rng);
                let jb = b.translated(dx, dy);
                dets.push(DetEntry {
                    frame,
                    source_id: idx as u64 + 1,
                    bbox: jb,
                    confidence: rng.gen_range(0.85..1.0),
                });
            }
        }
        frames.push(img);
    }
    let maps = frames.iter().map(FeatureMap::from_gray).collect();
    Ok(SynthData {
        frames,
        maps,
        gt,
        dets,
        width: scenario.width,
        height: scenario.height,
        frame_count: scenario.frames,
    })
}

/// Builds training frame pairs from generated data. For each consecutive
/// frame pair: the detection side holds the (jittered) detections at t,
/// the tracklet side holds the frame-t positions of objects visible at
/// t-1, mirroring flow-aligned re-extraction; labels match identities.
pub fn training_pairs(
    data: &SynthData,
    scenario: &SynthScenario,
) -> Vec<crate::train::FramePairSample> {
    let mut pairs = Vec::new();
    for t in 2..=data.frame_count {
        let dets: Vec<&DetEntry> = data.dets.iter().filter(|d| d.frame == t).collect();
        let prev_visible: Vec<usize> = scenario
            .objects
            .iter()
            .enumerate()
            .filter(|(_, o)| !occluded_at(o, t - 1))
            .map(|(i, _)| i)
            .collect();
        if dets.is_empty() || prev_visible.is_empty() {
            continue;
        }
        let trk_boxes: Vec<BBox> =
            prev_visible.iter().map(|&i| object_box_at(&scenario.objects[i], t)).collect();
        let det_boxes: Vec<BBox> = dets.iter().map(|d| d.bbox).collect();
        let mut labels = ndarray::Array2::zeros((dets.len(), prev_visible.len()));
        for (row, d) in dets.iter().enumerate() {
            for (col, &obj_idx) in prev_visible.iter().enumerate() {
                if d.source_id == obj_idx as u64 + 1 && !occluded_at(&scenario.objects[obj_idx], t)
                {
                    labels[(row, col)] = 1.0;
                }
            }
        }
        let labels = crate::loss::LabelMatrix::new(labels).expect("synthetic labels valid");
        pairs.push(crate::train::FramePairSample {
            map: data.maps[(t - 1) as usize].clone(),
            det_boxes,
            trk_boxes,
            labels,
        });
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_scenario() -> SynthScenario {
        let mut s = SynthScenario::new(
            128,
            96,
            5,
            vec![ObjectSpec {
                start: BBox::new(10.0, 10.0, 20.0, 20.0).unwrap(),
                velocity: (0.0, 0.0),
                texture_seed: 1,
                occlusion: None,
            }],
        );
        s.det_jitter_sigma = 0.0;
        s.det_drop_rate = 0.0;
        s
    }

    #[test]
    fn static_object_has_constant_gt() {
        let data = gen_scenario(&simple_scenario(), 7).unwrap();
        assert_eq!(data.gt.len(), 5);
        for e in &data.gt {
            assert_eq!(e.id, 1);
            assert!(e.visible);
            assert_eq!(e.bbox, data.gt[0].bbox);
        }
        assert_eq!(data.frames.len(), 5);
        assert_eq!(data.dets.len(), 5);
    }

    #[test]
    fn crossing_with_occlusion_flagged() {
        let s = SynthScenario::new(
            160,
            120,
            10,
            vec![
                ObjectSpec {
                    start: BBox::new(10.0, 40.0, 20.0, 20.0).unwrap(),
                    velocity: (10.0, 0.0),
                    texture_seed: 1,
                    occlusion: None,
                },
                ObjectSpec {
                    start: BBox::new(100.0, 40.0, 20.0, 20.0).unwrap(),
                    velocity: (-8.0, 0.0),
                    texture_seed: 2,
                    occlusion: Some((5, 7)),
                },
            ],
        );
        let data = gen_scenario(&s, 3).unwrap();
        for e in data.gt.iter().filter(|e| e.id == 2) {
            assert_eq!(e.visible, !(5..=7).contains(&e.frame));
        }
        // No detections while occluded.
        assert!(data
            .dets
            .iter()
            .all(|d| d.source_id != 2 || !(5..=7).contains(&d.frame)));
    }

    #[test]
    fn deterministic_under_seed() {
        let s = simple_scenario();
        let a = gen_scenario(&s, 42).unwrap();
        let b = gen_scenario(&s, 42).unwrap();
        for (fa, fb) in a.frames.iter().zip(&b.frames) {
            assert_eq!(fa.data, fb.data);
        }
        assert_eq!(a.dets.len(), b.dets.len());
        for (da, db) in a.dets.iter().zip(&b.dets) {
            assert_eq!(da.bbox, db.bbox);
            assert_eq!(da.confidence, db.confidence);
        }
    }

    #[test]
    fn infeasible_scenario_rejected() {
        let s = SynthScenario::new(
            64,
            64,
            10,
            vec![ObjectSpec {
                start: BBox::new(50.0, 10.0, 20.0, 20.0).unwrap(),
                velocity: (5.0, 0.0),
                texture_seed: 1,
                occlusion: None,
            }],
        );
        assert!(matches!(gen_scenario(&s, 1), Err(SynthError::ScenarioInfeasible(_))));
    }

    #[test]
    fn training_pairs_have_valid_labels() {
        let s = SynthScenario::new(
            160,
            120,
            6,
            vec![
                ObjectSpec {
                    start: BBox::new(10.0, 10.0, 20.0, 20.0).unwrap(),
                    velocity: (3.0, 2.0),
                    texture_seed: 1,
                    occlusion: None,
                },
                ObjectSpec {
                    start: BBox::new(100.0, 60.0, 20.0, 20.0).unwrap(),
                    velocity: (-2.0, 1.0),
                    texture_seed: 2,
                    occlusion: None,
                },
            ],
        );
        let data = gen_scenario(&s, 9).unwrap();
        let pairs = training_pairs(&data, &s);
        assert_eq!(pairs.len(), 5);
        for p in &pairs {
            assert_eq!(p.labels.dim(), (p.det_boxes.len(), p.trk_boxes.len()));
        }
    }
}
