//! Pyramidal Lucas-Kanade sparse optical flow.
//!
//! Predicts where a tracklet's center moved between consecutive frames.
//! Coarse-to-fine iteration over an image pyramid keeps the method valid
//! for large motions that a single-level window could not capture.

use crate::types::BBox;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FlowError {
    #[error("pyramid level {level} would be {width}x{height}, below the 16 px floor")]
    TooSmall { level: usize, width: u32, height: u32 },
    #[error("point ({x}, {y}) outside the frame")]
    OutOfBounds { x: f64, y: f64 },
    #[error("frame data length {len} does not match {width}x{height}")]
    BadFrame { len: usize, width: u32, height: u32 },
}

/// Single-channel image with intensities in [0, 1], row-major.
#[derive(Debug, Clone)]
pub struct GrayFrame {
    pub width: u32,
    pub height: u32,
    pub data: Vec<f64>,
}

impl GrayFrame {
    pub fn new(width: u32, height: u32, data: Vec<f64>) -> Result<Self, FlowError> {
        if data.len() != (width as usize) * (height as usize) {
            return Err(FlowError::BadFrame { len: data.len(), width, height });
        }
        Ok(Self { width, height, data })
    }

    /// ITU-R 601 luma conversion from interleaved 8-bit RGB.
    pub fn from_rgb8(width: u32, height: u32, rgb: &[u8]) -> Result<Self, FlowError> {
        if rgb.len() != (width as usize) * (height as usize) * 3 {
            return Err(FlowError::BadFrame { len: rgb.len(), width, height });
        }
        let data = rgb
            .chunks_exact(3)
            .map(|p| (0.299 * p[0] as f64 + 0.587 * p[1] as f64 + 0.114 * p[2] as f64) / 255.0)
            .collect();
        Ok(Self { width, height, data })
    }

    /// Pixel value with integer coordinates clamped to the border.
    pub fn at(&self, x: i64, y: i64) -> f64 {
        let xi = x.clamp(0, self.width as i64 - 1) as usize;
        let yi = y.clamp(0, self.height as i64 - 1) as usize;
        self.data[yi * self.width as usize + xi]
    }

    /// Bilinear sample at a real coordinate, clamped to the border.
    pub fn sample(&self, x: f64, y: f64) -> f64 {
        let x0 = x.floor();
        let y0 = y.floor();
        let fx = x - x0;
        let fy = y - y0;
        let x0 = x0 as i64;
        let y0 = y0 as i64;
        let v00 = self.at(x0, y0);
        let v10 = self.at(x0 + 1, y0);
        let v01 = self.at(x0, y0 + 1);
        let v11 = self.at(x0 + 1, y0 + 1);
        v00 * (1.0 - fx) * (1.0 - fy)
            + v10 * fx * (1.0 - fy)
            + v01 * (1.0 - fx) * fy
            + v11 * fx * fy
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= 0.0 && y >= 0.0 && x <= (self.width - 1) as f64 && y <= (self.height - 1) as f64
    }
}

/// LK configuration. Defaults: 120x120 window, 3 pyramid levels, 10
/// iterations per level, convergence threshold 0.01 px.
#[derive(Debug, Clone)]
pub struct FlowConfig {
    pub window: u32,
    pub levels: usize,
    pub max_iters: u32,
    pub eps: f64,
}

impl Default for FlowConfig {
    fn default() -> Self {
        Self { window: 120, levels: 3, max_iters: 10, eps: 0.01 }
    }
}

// 5-tap binomial smoothing kernel, [1 4 6 4 1] / 16.
const BINOMIAL: [f64; 5] = [1.0 / 16.0, 4.0 / 16.0, 6.0 / 16.0, 4.0 / 16.0, 1.0 / 16.0];

// Mirror index without repeating the edge sample (reflect-101).
fn reflect(i: i64, n: i64) -> i64 {
    let mut i = i;
    loop {
        if i < 0 {
            i = -i;
        } else if i >= n {
            i = 2 * (n - 1) - i;
        } else {
            return i;
        }
    }
}

fn smooth(frame: &GrayFrame) -> GrayFrame {
    let w = frame.width as i64;
    let h = frame.height as i64;
    let mut rows = vec![0.0; (w * h) as usize];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (t, k) in BINOMIAL.iter().enumerate() {
                let xi = reflect(x + t as i64 - 2, w);
                acc += k * frame.data[(y * w + xi) as usize];
            }
            rows[(y * w + x) as usize] = acc;
        }
    }
    let mut out = vec![0.0; (w * h) as usize];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (t, k) in BINOMIAL.iter().enumerate() {
                let yi = reflect(y + t as i64 - 2, h);
                acc += k * rows[(yi * w + x) as usize];
            }
            out[(y * w + x) as usize] = acc;
        }
    }
    GrayFrame { width: frame.width, height: frame.height, data: out }
}

fn decimate(frame: &GrayFrame) -> GrayFrame {
    let nw = (frame.width + 1) / 2;
    let nh = (frame.height + 1) / 2;
    let mut data = Vec::with_capacity((nw * nh) as usize);
    for y in 0..nh {
        for x in 0..nw {
            data.push(frame.data[(y as usize * 2) * frame.width as usize + x as usize * 2]);
        }
    }
    GrayFrame { width: nw, height: nh, data }
}

/// Builds an image pyramid. Level 0 is the input; each further level is
/// binomially low-pass filtered and decimated by 2 in each axis.
pub fn build_pyramid(frame: &GrayFrame, levels: usize) -> Result<Vec<GrayFrame>, FlowError> {
    assert!(levels >= 1);
    let mut pyr = vec![frame.clone()];
    for level in 1..levels {
        let next = decimate(&smooth(pyr.last().unwrap()));
        if next.width < 16 || next.height < 16 {
            return Err(FlowError::TooSmall { level, width: next.width, height: next.height });
        }
        pyr.push(next);
    }
    Ok(pyr)
}

/// Flow estimate for a single point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowResult {
    pub dx: f64,
    pub dy: f64,
    pub converged: bool,
}

// Window side at a pyramid level: halved per level, floored at 15,
// forced odd so the window has a center sample.
fn window_at_level(window: u32, level: usize) -> i64 {
    let mut w = (window >> level).max(15) as i64;
    if w % 2 == 0 {
        w += 1;
    }
    w
}

/// Tracks one point from `prev` to `curr` with iterative coarse-to-fine LK.
pub fn track_point(
    prev: &GrayFrame,
    curr: &GrayFrame,
    p: (f64, f64),
    cfg: &FlowConfig,
) -> Result<FlowResult, FlowError> {
    if !prev.contains(p.0, p.1) {
        return Err(FlowError::OutOfBounds { x: p.0, y: p.1 });
    }
    let prev_pyr = build_pyramid(prev, cfg.levels)?;
    let curr_pyr = build_pyramid(curr, cfg.levels)?;

    let mut gx = 0.0; // flow carried from coarser levels, in this level's pixels
    let mut gy = 0.0;
    let mut all_singular = true;
    let mut last_step = f64::INFINITY;

    for level in (0..cfg.levels).rev() {
        let pl_prev = &prev_pyr[level];
        let pl_curr = &curr_pyr[level];
        let scale = (1u64 << level) as f64;
        let px = p.0 / scale;
        let py = p.1 / scale;
        let r = window_at_level(cfg.window, level) / 2;

        // Spatial gradients of the previous frame over the window, by
        // central differences of bilinear samples. Fixed per level.
        let n = (2 * r + 1) as usize;
        let mut ix = vec![0.0; n * n];
        let mut iy = vec![0.0; n * n];
        let mut tmpl = vec![0.0; n * n];
        let mut g11 = 0.0;
        let mut g12 = 0.0;
        let mut g22 = 0.0;
        for (wy, oy) in (-r..=r).enumerate() {
            for (wx, ox) in (-r..=r).enumerate() {
                let sx = px + ox as f64;
                let sy = py + oy as f64;
                let dx = (pl_prev.sample(sx + 1.0, sy) - pl_prev.sample(sx - 1.0, sy)) / 2.0;
                let dy = (pl_prev.sample(sx, sy + 1.0) - pl_prev.sample(sx, sy - 1.0)) / 2.0;
                ix[wy * n + wx] = dx;
                iy[wy * n + wx] = dy;
                tmpl[wy * n + wx] = pl_prev.sample(sx, sy);
                g11 += dx * dx;
                g12 += dx * dy;
                g22 += dy * dy;
            }
        }
        let trace = g11 + g22;
        let det = g11 * g22 - g12 * g12;
        let min_eig = trace / 2.0 - ((trace / 2.0) * (trace / 2.0) - det).max(0.0).sqrt();
        let singular = min_eig < 1e-9 * (n * n) as f64;

        if !singular {
            all_singular = false;
            let mut vx = 0.0;
            let mut vy = 0.0;
            for _ in 0..cfg.max_iters {
                let mut b1 = 0.0;
                let mut b2 = 0.0;
                for (wy, oy) in (-r..=r).enumerate() {
                    for (wx, ox) in (-r..=r).enumerate() {
                        let diff = tmpl[wy * n + wx]
                            - pl_curr.sample(px + gx + vx + ox as f64, py + gy + vy + oy as f64);
                        b1 += diff * ix[wy * n + wx];
                        b2 += diff * iy[wy * n + wx];
                    }
                }
                let sx = (g22 * b1 - g12 * b2) / det;
                let sy = (g11 * b2 - g12 * b1) / det;
                vx += sx;
                vy += sy;
                last_step = (sx * sx + sy * sy).sqrt();
                if last_step < cfg.eps {
                    break;
                }
            }
            // An ill-conditioned tensor can make the iteration run away;
            // a refinement past the window is meaningless, so drop it.
            if vx.hypot(vy) > (2 * r + 1) as f64 {
                vx = 0.0;
                vy = 0.0;
                last_step = f64::INFINITY;
            }
            gx += vx;
            gy += vy;
        }

        if level > 0 {
            gx *= 2.0;
            gy *= 2.0;
        }
    }

    Ok(FlowResult { dx: gx, dy: gy, converged: !all_singular && last_step < cfg.eps })
}

/// Translates a tracklet box by the flow of its center; width and height
/// are kept. On non-convergence the box is returned unchanged with the
/// flag cleared so the caller can fall back.
pub fn predict_tracklet_bbox(
    prev: &GrayFrame,
    curr: &GrayFrame,
    b: &BBox,
    cfg: &FlowConfig,
) -> Result<(BBox, bool), FlowError> {
    let (cx, cy) = b.center();
    // Cap the window to the box so the estimate reflects the object's
    // motion; a wider window lets the static surround outvote a small
    // fast-moving target and drag the flow toward zero.
    let box_win = b.width.min(b.height).floor().max(1.0) as u32;
    let cfg = FlowConfig { window: cfg.window.min(box_win), ..*cfg };
    let flow = track_point(prev, curr, (cx, cy), &cfg)?;
    if flow.converged {
        Ok((b.translated(flow.dx, flow.dy), true))
    } else {
        Ok((*b, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::sinusoid_texture;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pyramid_of_constant_is_constant() {
        let f = GrayFrame::new(64, 64, vec![0.37; 64 * 64]).unwrap();
        let pyr = build_pyramid(&f, 3).unwrap();
        for level in &pyr {
            for v in &level.data {
                assert_abs_diff_eq!(*v, 0.37, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn pyramid_sizes() {
        let f = GrayFrame::new(64, 64, vec![0.0; 64 * 64]).unwrap();
        let pyr = build_pyramid(&f, 3).unwrap();
        let dims: Vec<_> = pyr.iter().map(|l| (l.width, l.height)).collect();
        assert_eq!(dims, vec![(64, 64), (32, 32), (16, 16)]);
        // Odd sizes round up.
        let f = GrayFrame::new(65, 33, vec![0.0; 65 * 33]).unwrap();
        let pyr = build_pyramid(&f, 2).unwrap();
        assert_eq!((pyr[1].width, pyr[1].height), (33, 17));
    }

    #[test]
    fn pyramid_too_small() {
        let f = GrayFrame::new(40, 40, vec![0.0; 40 * 40]).unwrap();
        assert!(matches!(build_pyramid(&f, 3), Err(FlowError::TooSmall { .. })));
    }

    /// Direct-convolution oracle for one smoothing pass.
    fn smooth_oracle(f: &GrayFrame) -> Vec<f64> {
        let w = f.width as i64;
        let h = f.height as i64;
        let mut out = vec![0.0; (w * h) as usize];
        for y in 0..h {
            for x in 0..w {
                let mut acc = 0.0;
                for (ty, ky) in BINOMIAL.iter().enumerate() {
                    for (tx, kx) in BINOMIAL.iter().enumerate() {
                        let yi = reflect(y + ty as i64 - 2, h);
                        let xi = reflect(x + tx as i64 - 2, w);
                        acc += ky * kx * f.data[(yi * w + xi) as usize];
                    }
                }
                out[(y * w + x) as usize] = acc;
            }
        }
        out
    }

    #[test]
    fn checkerboard_smooths_to_mid_gray() {
        let n = 32u32;
        let data: Vec<f64> = (0..n * n)
            .map(|i| {
                let (x, y) = (i % n, i / n);
                ((x + y) % 2) as f64
            })
            .collect();
        let f = GrayFrame::new(n, n, data).unwrap();
        let oracle = smooth_oracle(&f);
        let pyr = build_pyramid(&f, 2).unwrap();
        // Smoothing alone already flattens a Nyquist checkerboard.
        for v in &oracle {
            assert_abs_diff_eq!(*v, 0.5, epsilon = 1e-6);
        }
        for v in &pyr[1].data {
            assert_abs_diff_eq!(*v, 0.5, epsilon = 1e-6);
        }
    }

    #[test]
    fn smooth_matches_direct_convolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = sinusoid_texture(33, 21, &mut rng);
        let got = smooth(&f);
        let want = smooth_oracle(&f);
        for (g, w) in got.data.iter().zip(&want) {
            assert_abs_diff_eq!(*g, *w, epsilon = 1e-12);
        }
    }

    #[test]
    fn zero_motion_on_identical_frames() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = sinusoid_texture(200, 200, &mut rng);
        let r = track_point(&f, &f, (100.0, 100.0), &FlowConfig::default()).unwrap();
        assert!(r.converged);
        assert!(r.dx.abs() < 0.05 && r.dy.abs() < 0.05, "({}, {})", r.dx, r.dy);
    }

    #[test]
    fn recovers_small_shift() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (prev, curr) = crate::synth::shifted_pair(320, 240, 5.0, 3.0, &mut rng);
        let r = track_point(&prev, &curr, (160.0, 120.0), &FlowConfig::default()).unwrap();
        assert!(r.converged);
        assert!((r.dx - 5.0).abs() < 0.5 && (r.dy - 3.0).abs() < 0.5, "({}, {})", r.dx, r.dy);
    }

    #[test]
    fn recovers_large_shift_through_pyramid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (prev, curr) = crate::synth::shifted_pair(400, 300, 40.0, -25.0, &mut rng);
        let r = track_point(&prev, &curr, (200.0, 160.0), &FlowConfig::default()).unwrap();
        assert!(r.converged);
        assert!((r.dx - 40.0).abs() < 1.0 && (r.dy + 25.0).abs() < 1.0, "({}, {})", r.dx, r.dy);
    }

    #[test]
    fn flat_region_does_not_converge() {
        let prev = GrayFrame::new(64, 64, vec![0.5; 64 * 64]).unwrap();
        let curr = prev.clone();
        let r = track_point(&prev, &curr, (32.0, 32.0), &FlowConfig::default()).unwrap();
        assert!(!r.converged);
        let b = BBox::new(20.0, 20.0, 10.0, 10.0).unwrap();
        let (out, ok) = predict_tracklet_bbox(&prev, &curr, &b, &FlowConfig::default()).unwrap();
        assert!(!ok);
        assert_eq!(out, b);
    }

    #[test]
    fn bbox_prediction_follows_shift() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (prev, curr) = crate::synth::shifted_pair(320, 240, 5.0, 3.0, &mut rng);
        let b = BBox::new(140.0, 100.0, 40.0, 40.0).unwrap();
        let (out, ok) = predict_tracklet_bbox(&prev, &curr, &b, &FlowConfig::default()).unwrap();
        assert!(ok);
        assert_abs_diff_eq!(out.width, b.width);
        assert_abs_diff_eq!(out.height, b.height);
        assert!((out.left - b.left - 5.0).abs() < 0.5);
        assert!((out.top - b.top - 3.0).abs() < 0.5);
    }

    #[test]
    fn out_of_bounds_point_rejected() {
        let f = GrayFrame::new(64, 64, vec![0.5; 64 * 64]).unwrap();
        assert!(matches!(
            track_point(&f, &f, (-5.0, 10.0), &FlowConfig::default()),
            Err(FlowError::OutOfBounds { .. })
        ));
    }

    #[test]
    fn translation_equivariance_integer_shift() {
        // Evaluate the same continuous texture at integer-offset grids:
        // recovered flow must match the offset to high accuracy.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let tex = crate::synth::SinusoidField::random(&mut rng);
        let render = |ox: f64, oy: f64| {
            let data: Vec<f64> = (0..240u32 * 320)
                .map(|i| {
                    let (x, y) = ((i % 320) as f64, (i / 320) as f64);
                    tex.eval(x + ox, y + oy)
                })
                .collect();
            GrayFrame::new(320, 240, data).unwrap()
        };
        let prev = render(0.0, 0.0);
        let curr = render(-7.0, -4.0); // scene content moves by (+7, +4)
        let r = track_point(&prev, &curr, (160.0, 120.0), &FlowConfig::default()).unwrap();
        assert!(r.converged);
        assert!((r.dx - 7.0).abs() < 0.05 && (r.dy - 4.0).abs() < 0.05);
    }
}
