//! ROI-Align region pooling over feature maps and a trainable affine
//! embedding to fixed-dimension feature vectors.
//!
//! Feature maps are inputs here; no backbone is run. A grayscale frame
//! replicated as a 1-channel map with stride 1 is a valid feature map.

use crate::types::{BBox, FeatureVector};
use ndarray::{Array1, Array2};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RoiError {
    #[error("feature map has invalid shape: C={channels}, H={height}, W={width}")]
    EmptyMap { channels: usize, height: usize, width: usize },
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("no boxes supplied")]
    NoBoxes,
}

/// C x H x W feature tensor with a pixel stride relating map cells to
/// image coordinates.
#[derive(Debug, Clone)]
pub struct FeatureMap {
    pub channels: usize,
    pub height: usize,
    pub width: usize,
    pub stride: f64,
    /// Row-major C x H x W.
    pub data: Vec<f64>,
}

impl FeatureMap {
    pub fn new(
        channels: usize,
        height: usize,
        width: usize,
        stride: f64,
        data: Vec<f64>,
    ) -> Result<Self, RoiError> {
        if channels == 0 || height == 0 || width == 0 || data.len() != channels * height * width {
            return Err(RoiError::EmptyMap { channels, height, width });
        }
        assert!(stride > 0.0);
        Ok(Self { channels, height, width, stride, data })
    }

    /// Wraps a grayscale frame as a 1-channel map with stride 1.
    pub fn from_gray(frame: &crate::flow::GrayFrame) -> Self {
        Self {
            channels: 1,
            height: frame.height as usize,
            width: frame.width as usize,
            stride: 1.0,
            data: frame.data.clone(),
        }
    }

    fn at(&self, c: usize, y: i64, x: i64) -> f64 {
        let yi = y.clamp(0, self.height as i64 - 1) as usize;
        let xi = x.clamp(0, self.width as i64 - 1) as usize;
        self.data[(c * self.height + yi) * self.width + xi]
    }

    /// Bilinear sample in cell coordinates, clamped to the border.
    fn sample(&self, c: usize, x: f64, y: f64) -> f64 {
        let x0 = x.floor();
        let y0 = y.floor();
        let fx = x - x0;
        let fy = y - y0;
        let x0 = x0 as i64;
        let y0 = y0 as i64;
        self.at(c, y0, x0) * (1.0 - fx) * (1.0 - fy)
            + self.at(c, y0, x0 + 1) * fx * (1.0 - fy)
            + self.at(c, y0 + 1, x0) * (1.0 - fx) * fy
            + self.at(c, y0 + 1, x0 + 1) * fx * fy
    }
}

/// Trainable affine projection from pooled C x P x P regions to D dims.
#[derive(Debug, Clone)]
pub struct EmbedParams {
    /// D x (C*P*P), row per output dimension.
    pub projection: Array2<f64>,
    pub bias: Array1<f64>,
    pub pool: usize,
    pub dim: usize,
}

impl EmbedParams {
    /// Uniform(-1/sqrt(fanin), +1/sqrt(fanin)) initialization.
    pub fn init<R: Rng>(channels: usize, pool: usize, dim: usize, rng: &mut R) -> Self {
        let fanin = channels * pool * pool;
        let bound = 1.0 / (fanin as f64).sqrt();
        let projection =
            Array2::from_shape_fn((dim, fanin), |_| rng.gen_range(-bound..bound));
        let bias = Array1::from_shape_fn(dim, |_| rng.gen_range(-bound..bound));
        Self { projection, bias, pool, dim }
    }

    pub fn fanin(&self) -> usize {
        self.projection.ncols()
    }
}

/// Pools a box into a C x P x P grid (flattened row-major). Each bin
/// averages 2x2 regularly spaced bilinear samples; samples outside the
/// map clamp to the border.
pub fn roi_align(map: &FeatureMap, b: &BBox, pool: usize) -> Vec<f64> {
    let x0 = b.left / map.stride;
    let y0 = b.top / map.stride;
    let bw = b.width / map.stride / pool as f64;
    let bh = b.height / map.stride / pool as f64;
    let mut out = Vec::with_capacity(map.channels * pool * pool);
    for c in 0..map.channels {
        for py in 0..pool {
            for px in 0..pool {
                let mut acc = 0.0;
                for sy in 0..2 {
                    for sx in 0..2 {
                        // Sampling points at 1/4 and 3/4 of the bin.
                        let x = x0 + (px as f64 + (sx as f64 + 0.5) / 2.0) * bw - 0.5;
                        let y = y0 + (py as f64 + (sy as f64 + 0.5) / 2.0) * bh - 0.5;
                        acc += map.sample(c, x, y);
                    }
                }
                out.push(acc / 4.0);
            }
        }
    }
    out
}

/// Zero-mean, unit-variance normalization of a pooled region. Without it
/// every region shares a large DC component and all embeddings point the
/// same way; the guard keeps flat regions finite.
pub fn standardize(region: &[f64]) -> Vec<f64> {
    let n = region.len() as f64;
    let mean = region.iter().sum::<f64>() / n;
    let var = region.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    let scale = var.sqrt().max(1e-6);
    region.iter().map(|v| (v - mean) / scale).collect()
}

/// Affine projection of a pooled region to a feature vector.
pub fn embed(region: &[f64], params: &EmbedParams) -> Result<FeatureVector, RoiError> {
    if region.len() != params.fanin() {
        return Err(RoiError::ShapeMismatch { expected: params.fanin(), got: region.len() });
    }
    let values = params
        .projection
        .rows()
        .into_iter()
        .zip(params.bias.iter())
        .map(|(row, b)| row.iter().zip(region).map(|(w, x)| w * x).sum::<f64>() + b)
        .collect();
    Ok(FeatureVector::new(values))
}

/// Extracts one embedded feature row per box. Row order follows box order.
pub fn extract_features(
    map: &FeatureMap,
    boxes: &[BBox],
    params: &EmbedParams,
) -> Result<Array2<f64>, RoiError> {
    if boxes.is_empty() {
        return Err(RoiError::NoBoxes);
    }
    let mut out = Array2::zeros((boxes.len(), params.dim));
    for (i, b) in boxes.iter().enumerate() {
        let fv = embed(&standardize(&roi_align(map, b, params.pool)), params)?;
        for (j, v) in fv.values.iter().enumerate() {
            out[(i, j)] = *v;
        }
    }
    Ok(out)
}

/// Standardized pooled regions for every box, kept for the embedding
/// backward pass. Matches the inputs [`extract_features`] feeds into the
/// projection.
pub fn pooled_regions(map: &FeatureMap, boxes: &[BBox], pool: usize) -> Vec<Vec<f64>> {
    boxes.iter().map(|b| standardize(&roi_align(map, b, pool))).collect()
}

/// Accumulates embedding gradients given upstream dL/dF (rows matching
/// `regions`). Returns (d_projection, d_bias).
pub fn embed_backward(
    regions: &[Vec<f64>],
    d_features: &Array2<f64>,
    params: &EmbedParams,
) -> (Array2<f64>, Array1<f64>) {
    let mut d_proj = Array2::zeros(params.projection.raw_dim());
    let mut d_bias = Array1::zeros(params.bias.len());
    for (region, drow) in regions.iter().zip(d_features.rows()) {
        for (d, g) in drow.iter().enumerate() {
            d_bias[d] += g;
            for (k, x) in region.iter().enumerate() {
                d_proj[(d, k)] += g * x;
            }
        }
    }
    (d_proj, d_bias)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::Array2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bx(l: f64, t: f64, w: f64, h: f64) -> BBox {
        BBox::new(l, t, w, h).unwrap()
    }

    fn const_map(c: usize, h: usize, w: usize, v: f64) -> FeatureMap {
        FeatureMap::new(c, h, w, 1.0, vec![v; c * h * w]).unwrap()
    }

    #[test]
    fn roi_align_constant_map() {
        let map = const_map(2, 8, 8, 0.7);
        let out = roi_align(&map, &bx(1.0, 1.0, 5.0, 3.0), 7);
        assert_eq!(out.len(), 2 * 7 * 7);
        for v in out {
            assert_abs_diff_eq!(v, 0.7, epsilon = 1e-12);
        }
    }

    #[test]
    fn roi_align_ramp_closed_form() {
        // f(x_cell) = x over a 1x1x8 map; bbox spans cells [0,4), P=1.
        // Samples at x = 1 and 3 (bin quarters), shifted by the half-cell
        // alignment offset. Oracle: evaluate the bilinear form directly.
        let map = FeatureMap::new(1, 1, 8, 1.0, (0..8).map(|x| x as f64).collect()).unwrap();
        let b = bx(0.0, 0.0, 4.0, 1.0);
        let out = roi_align(&map, &b, 1);
        let sample = |x: f64| x.clamp(0.0, 7.0); // linear ramp interpolates to identity
        let xs = [0.0 + 1.0 - 0.5, 0.0 + 3.0 - 0.5];
        let want: f64 = xs.iter().map(|&x| sample(x)).sum::<f64>() * 2.0 / 4.0;
        assert_abs_diff_eq!(out[0], want, epsilon = 1e-12);
    }

    #[test]
    fn roi_align_outside_clamps_to_border() {
        let mut data = vec![0.0; 16];
        data[15] = 1.0; // bottom-right corner
        let map = FeatureMap::new(1, 4, 4, 1.0, data).unwrap();
        let out = roi_align(&map, &bx(100.0, 100.0, 10.0, 10.0), 3);
        for v in out {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn roi_align_linear_in_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a: Vec<f64> = (0..2 * 6 * 6).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..2 * 6 * 6).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let (al, be) = (0.3, -1.7);
        let mixed: Vec<f64> = a.iter().zip(&b).map(|(x, y)| al * x + be * y).collect();
        let ma = FeatureMap::new(2, 6, 6, 2.0, a).unwrap();
        let mb = FeatureMap::new(2, 6, 6, 2.0, b).unwrap();
        let mm = FeatureMap::new(2, 6, 6, 2.0, mixed).unwrap();
        let bbox = bx(1.5, 2.0, 7.0, 5.0);
        let ra = roi_align(&ma, &bbox, 4);
        let rb = roi_align(&mb, &bbox, 4);
        let rm = roi_align(&mm, &bbox, 4);
        for ((x, y), m) in ra.iter().zip(&rb).zip(&rm) {
            assert_abs_diff_eq!(al * x + be * y, *m, epsilon = 1e-9);
        }
    }

    #[test]
    fn standardize_zero_mean_unit_variance() {
        let region = vec![1.0, 2.0, 3.0, 4.0, 10.0];
        let out = standardize(&region);
        let n = out.len() as f64;
        let mean = out.iter().sum::<f64>() / n;
        let var = out.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        assert_abs_diff_eq!(mean, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(var, 1.0, epsilon = 1e-12);
        // Flat regions map to ~zero instead of dividing by zero.
        for v in standardize(&[0.7; 9]) {
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn embed_zero_region_zero_bias() {
        let params = EmbedParams {
            projection: Array2::from_elem((4, 9), 0.5),
            bias: Array1::zeros(4),
            pool: 3,
            dim: 4,
        };
        let fv = embed(&vec![0.0; 9], &params).unwrap();
        assert_eq!(fv.values, vec![0.0; 4]);
    }

    #[test]
    fn embed_identity_projection() {
        let params = EmbedParams {
            projection: Array2::eye(9),
            bias: Array1::zeros(9),
            pool: 3,
            dim: 9,
        };
        let region: Vec<f64> = (0..9).map(|i| i as f64 * 0.25).collect();
        let fv = embed(&region, &params).unwrap();
        assert_eq!(fv.values, region);
    }

    #[test]
    fn embed_matches_scalar_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fanin = 2 * 3 * 3;
        let params = EmbedParams::init(2, 3, 5, &mut rng);
        let region: Vec<f64> = (0..fanin).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let fv = embed(&region, &params).unwrap();
        for d in 0..5 {
            let mut want = params.bias[d];
            for k in 0..fanin {
                want += params.projection[(d, k)] * region[k];
            }
            assert_abs_diff_eq!(fv.values[d], want, epsilon = 1e-10);
        }
    }

    #[test]
    fn embed_shape_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let params = EmbedParams::init(2, 3, 5, &mut rng);
        assert!(matches!(embed(&vec![0.0; 7], &params), Err(RoiError::ShapeMismatch { .. })));
    }

    #[test]
    fn extract_features_rows_match_per_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let data: Vec<f64> = (0..1 * 10 * 10).map(|_| rng.gen_range(0.0..1.0)).collect();
        let map = FeatureMap::new(1, 10, 10, 1.0, data).unwrap();
        let params = EmbedParams::init(1, 3, 6, &mut rng);
        let boxes = vec![bx(0.0, 0.0, 4.0, 4.0), bx(5.0, 5.0, 4.0, 4.0), bx(0.0, 0.0, 4.0, 4.0)];
        let f = extract_features(&map, &boxes, &params).unwrap();
        assert_eq!(f.nrows(), 3);
        for (i, b) in boxes.iter().enumerate() {
            let fv = embed(&standardize(&roi_align(&map, b, 3)), &params).unwrap();
            for (j, v) in fv.values.iter().enumerate() {
                assert_abs_diff_eq!(f[(i, j)], *v, epsilon = 1e-12);
            }
        }
        // Duplicated box gives identical rows.
        for j in 0..6 {
            assert_eq!(f[(0, j)], f[(2, j)]);
        }
    }

    #[test]
    fn embed_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut params = EmbedParams::init(1, 2, 3, &mut rng);
        let regions = vec![
            (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>(),
            (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>(),
        ];
        // Loss = sum of squares of all feature entries.
        let loss = |p: &EmbedParams| -> f64 {
            regions
                .iter()
                .map(|r| embed(r, p).unwrap().values.iter().map(|v| v * v).sum::<f64>())
                .sum()
        };
        let features: Vec<FeatureVector> =
            regions.iter().map(|r| embed(r, &params).unwrap()).collect();
        let d_feat = Array2::from_shape_fn((2, 3), |(i, j)| 2.0 * features[i].values[j]);
        let (d_proj, d_bias) = embed_backward(&regions, &d_feat, &params);

        let h = 1e-6;
        for d in 0..3 {
            for k in 0..4 {
                let orig = params.projection[(d, k)];
                params.projection[(d, k)] = orig + h;
                let up = loss(&params);
                params.projection[(d, k)] = orig - h;
                let down = loss(&params);
                params.projection[(d, k)] = orig;
                let fd = (up - down) / (2.0 * h);
                let rel = (d_proj[(d, k)] - fd).abs() / fd.abs().max(1e-8);
                assert!(rel < 1e-5, "proj ({d},{k}): {} vs {}", d_proj[(d, k)], fd);
            }
            let orig = params.bias[d];
            params.bias[d] = orig + h;
            let up = loss(&params);
            params.bias[d] = orig - h;
            let down = loss(&params);
            params.bias[d] = orig;
            let fd = (up - down) / (2.0 * h);
            let rel = (d_bias[d] - fd).abs() / fd.abs().max(1e-8);
            assert!(rel < 1e-5, "bias {d}: {} vs {}", d_bias[d], fd);
        }
    }
}
