//! Adaptive graph neural network over the bipartite detection/tracklet
//! graph.
//!
//! Edge weights mix bbox IOU with an inverse-distance feature similarity
//! through a learned scalar. Node features are aggregated across the
//! bipartition, gated per-dimension by a learned sigmoid, passed through
//! one hidden layer, row-normalized and multiplied to give the output
//! similarity matrix. Both the forward pass and the exact reverse-mode
//! backward pass are implemented here.

use ndarray::{Array1, Array2};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AgnnError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cache does not match upstream gradient shape")]
    StaleCache,
}

pub type EdgeMatrix = Array2<f64>;
pub type SimilarityMatrix = Array2<f64>;

const DIST_EPS: f64 = 1e-16;
const NORM_GUARD: f64 = 1e-12;

/// Trainable parameters: hidden-layer weights W1/W2, the adaptive gate
/// weight Wa, and the location/appearance mixing logit.
#[derive(Debug, Clone)]
pub struct AgnnParams {
    pub w1: Array2<f64>,
    pub w2: Array2<f64>,
    pub wa: Array2<f64>,
    /// Logit of the mixing weight; zero gives w = 0.5.
    pub w_raw: f64,
}

impl AgnnParams {
    pub fn init<R: Rng>(dim: usize, rng: &mut R) -> Self {
        let bound = 1.0 / (dim as f64).sqrt();
        let mut mat = || Array2::from_shape_fn((dim, dim), |_| rng.gen_range(-bound..bound));
        Self { w1: mat(), w2: mat(), wa: mat(), w_raw: 0.0 }
    }

    pub fn dim(&self) -> usize {
        self.w1.nrows()
    }

    /// Mixing weight w = logistic(w_raw), always in (0, 1).
    pub fn mixing_weight(&self) -> f64 {
        sigmoid(self.w_raw)
    }
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Inverse-distance similarity with per-row L2 normalization.
/// s_ij = 1 / (||fd_i - ft_j|| + 1e-16), each row scaled to unit norm.
pub fn initial_similarity(fd: &Array2<f64>, ft: &Array2<f64>) -> EdgeMatrix {
    let (m, n) = (fd.nrows(), ft.nrows());
    let mut s = Array2::zeros((m, n));
    for i in 0..m {
        for j in 0..n {
            let dist = fd
                .row(i)
                .iter()
                .zip(ft.row(j))
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            s[(i, j)] = 1.0 / (dist + DIST_EPS);
        }
    }
    for mut row in s.rows_mut() {
        let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        row.mapv_inplace(|v| v / norm);
    }
    s
}

/// Prior edge matrix E = w * IOU + (1 - w) * S_ft.
pub fn prior_edges(s_ft: &EdgeMatrix, iou: &EdgeMatrix, w: f64) -> Result<EdgeMatrix, AgnnError> {
    if s_ft.dim() != iou.dim() {
        return Err(AgnnError::ShapeMismatch(format!("{:?} vs {:?}", s_ft.dim(), iou.dim())));
    }
    Ok(w * iou + (1.0 - w) * s_ft)
}

/// Intermediates retained by [`forward`] for the backward pass.
pub struct ForwardCache {
    fd: Array2<f64>,
    ft: Array2<f64>,
    iou: EdgeMatrix,
    dist: Array2<f64>,
    s_raw: Array2<f64>,
    row_norms: Array1<f64>,
    s_ft: EdgeMatrix,
    w: f64,
    edges: EdgeMatrix,
    ft_ag: Array2<f64>,
    fd_ag: Array2<f64>,
    gate_d: Array2<f64>,
    gate_t: Array2<f64>,
    mod_d: Array2<f64>,
    mod_t: Array2<f64>,
    pre_d: Array2<f64>,
    pre_t: Array2<f64>,
    hd_norms: Array1<f64>,
    ht_norms: Array1<f64>,
    hd_n: Array2<f64>,
    ht_n: Array2<f64>,
}

/// Gradients of the loss with respect to parameters and inputs.
pub struct AgnnGrads {
    pub w1: Array2<f64>,
    pub w2: Array2<f64>,
    pub wa: Array2<f64>,
    pub w_raw: f64,
    pub fd: Array2<f64>,
    pub ft: Array2<f64>,
}

fn relu(x: f64) -> f64 {
    x.max(0.0)
}

fn normalize_rows(h: &Array2<f64>) -> (Array2<f64>, Array1<f64>) {
    let norms = Array1::from_iter(
        h.rows().into_iter().map(|r| r.iter().map(|v| v * v).sum::<f64>().sqrt()),
    );
    let mut out = h.clone();
    for (mut row, norm) in out.rows_mut().into_iter().zip(norms.iter()) {
        row.mapv_inplace(|v| v / (norm + NORM_GUARD));
    }
    (out, norms)
}

/// Full forward pass: detection features (M x D), tracklet features
/// (N x D), their IOU matrix, and parameters in; similarity out.
pub fn forward(
    fd: &Array2<f64>,
    ft: &Array2<f64>,
    iou: &EdgeMatrix,
    params: &AgnnParams,
) -> Result<(SimilarityMatrix, ForwardCache), AgnnError> {
    let d = params.dim();
    if fd.ncols() != d || ft.ncols() != d {
        return Err(AgnnError::ShapeMismatch(format!(
            "feature dim {} / {} vs params dim {}",
            fd.ncols(),
            ft.ncols(),
            d
        )));
    }
    if iou.dim() != (fd.nrows(), ft.nrows()) {
        return Err(AgnnError::ShapeMismatch(format!(
            "iou {:?} vs ({}, {})",
            iou.dim(),
            fd.nrows(),
            ft.nrows()
        )));
    }

    let (m, n) = (fd.nrows(), ft.nrows());
    let mut dist = Array2::zeros((m, n));
    let mut s_raw = Array2::zeros((m, n));
    for i in 0..m {
        for j in 0..n {
            let dd = fd
                .row(i)
                .iter()
                .zip(ft.row(j))
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            dist[(i, j)] = dd;
            s_raw[(i, j)] = 1.0 / (dd + DIST_EPS);
        }
    }
    let row_norms = Array1::from_iter(
        s_raw.rows().into_iter().map(|r| r.iter().map(|v| v * v).sum::<f64>().sqrt()),
    );
    let mut s_ft = s_raw.clone();
    for (mut row, norm) in s_ft.rows_mut().into_iter().zip(row_norms.iter()) {
        row.mapv_inplace(|v| v / norm);
    }

    let w = params.mixing_weight();
    let edges = prior_edges(&s_ft, iou, w)?;

    let ft_ag = edges.dot(ft);
    let fd_ag = edges.t().dot(fd);

    let gate_d = fd.dot(&params.wa).mapv(sigmoid);
    let gate_t = ft.dot(&params.wa).mapv(sigmoid);
    let mod_d = ft_ag.dot(&params.w2);
    let mod_t = fd_ag.dot(&params.w2);
    let pre_d = fd.dot(&params.w1) + &gate_d * &mod_d;
    let pre_t = ft.dot(&params.w1) + &gate_t * &mod_t;

    let hd = pre_d.mapv(relu);
    let ht = pre_t.mapv(relu);
    let (hd_n, hd_norms) = normalize_rows(&hd);
    let (ht_n, ht_norms) = normalize_rows(&ht);

    let s_out = hd_n.dot(&ht_n.t());
    let cache = ForwardCache {
        fd: fd.clone(),
        ft: ft.clone(),
        iou: iou.clone(),
        dist,
        s_raw,
        row_norms,
        s_ft,
        w,
        edges,
        ft_ag,
        fd_ag,
        gate_d,
        gate_t,
        mod_d,
        mod_t,
        pre_d,
        pre_t,
        hd_norms,
        ht_norms,
        hd_n,
        ht_n,
    };
    Ok((s_out, cache))
}

// Backward through g = h / (||h|| + guard) for each row.
fn normalize_rows_backward(
    d_out: &Array2<f64>,
    normalized: &Array2<f64>,
    norms: &Array1<f64>,
) -> Array2<f64> {
    let mut d_h = Array2::zeros(d_out.raw_dim());
    for i in 0..d_out.nrows() {
        let nu = norms[i];
        let denom = nu + NORM_GUARD;
        let g = normalized.row(i);
        let dg = d_out.row(i);
        // h = g * denom, so h . dg = denom * (g . dg)
        let gd: f64 = g.iter().zip(dg).map(|(a, b)| a * b).sum();
        for k in 0..d_out.ncols() {
            let h_k = g[k] * denom;
            let second = if nu > 0.0 { h_k * denom * gd / (nu * denom * denom) } else { 0.0 };
            d_h[(i, k)] = dg[k] / denom - second;
        }
    }
    d_h
}

/// Exact reverse-mode gradients through the whole forward computation,
/// including the dependence of the edge matrix on the mixing weight and
/// on the input features via the initial similarity.
pub fn backward(
    cache: &ForwardCache,
    params: &AgnnParams,
    d_s_out: &Array2<f64>,
) -> Result<AgnnGrads, AgnnError> {
    let (m, n) = cache.s_ft.dim();
    if d_s_out.dim() != (m, n) {
        return Err(AgnnError::StaleCache);
    }
    let d = params.dim();

    // S_out = Hd_n Ht_n^T
    let d_hd_n = d_s_out.dot(&cache.ht_n);
    let d_ht_n = d_s_out.t().dot(&cache.hd_n);

    let d_hd = normalize_rows_backward(&d_hd_n, &cache.hd_n, &cache.hd_norms);
    let d_ht = normalize_rows_backward(&d_ht_n, &cache.ht_n, &cache.ht_norms);

    // ReLU
    let relu_mask = |pre: &Array2<f64>, g: &Array2<f64>| -> Array2<f64> {
        let mut out = g.clone();
        out.zip_mut_with(pre, |gv, pv| {
            if *pv <= 0.0 {
                *gv = 0.0;
            }
        });
        out
    };
    let d_pre_d = relu_mask(&cache.pre_d, &d_hd);
    let d_pre_t = relu_mask(&cache.pre_t, &d_ht);

    let mut g_w1 = Array2::zeros((d, d));
    let mut g_w2 = Array2::zeros((d, d));
    let mut g_wa = Array2::zeros((d, d));
    let mut g_fd = Array2::zeros((m, d));
    let mut g_ft = Array2::zeros((n, d));

    // pre_d = Fd W1 + gate_d .* mod_d, gate_d = sigmoid(Fd Wa), mod_d = Ft_ag W2
    g_w1 = g_w1 + cache.fd.t().dot(&d_pre_d);
    g_fd = g_fd + d_pre_d.dot(&params.w1.t());
    let d_mod_d = &d_pre_d * &cache.gate_d;
    g_w2 = g_w2 + cache.ft_ag.t().dot(&d_mod_d);
    let d_ft_ag = d_mod_d.dot(&params.w2.t());
    let d_gate_d = &d_pre_d * &cache.mod_d;
    let d_za = &d_gate_d * &cache.gate_d * &cache.gate_d.mapv(|v| 1.0 - v);
    g_wa = g_wa + cache.fd.t().dot(&d_za);
    g_fd = g_fd + d_za.dot(&params.wa.t());

    // pre_t = Ft W1 + gate_t .* mod_t, mod_t = Fd_ag W2
    g_w1 = g_w1 + cache.ft.t().dot(&d_pre_t);
    g_ft = g_ft + d_pre_t.dot(&params.w1.t());
    let d_mod_t = &d_pre_t * &cache.gate_t;
    g_w2 = g_w2 + cache.fd_ag.t().dot(&d_mod_t);
    let d_fd_ag = d_mod_t.dot(&params.w2.t());
    let d_gate_t = &d_pre_t * &cache.mod_t;
    let d_za_t = &d_gate_t * &cache.gate_t * &cache.gate_t.mapv(|v| 1.0 - v);
    g_wa = g_wa + cache.ft.t().dot(&d_za_t);
    g_ft = g_ft + d_za_t.dot(&params.wa.t());

    // Aggregations: Ft_ag = E Ft, Fd_ag = E^T Fd
    let mut d_edges = d_ft_ag.dot(&cache.ft.t());
    d_edges = d_edges + cache.fd.dot(&d_fd_ag.t());
    g_ft = g_ft + cache.edges.t().dot(&d_ft_ag);
    g_fd = g_fd + cache.edges.dot(&d_fd_ag);

    // E = w IOU + (1 - w) S_ft
    let d_w: f64 = d_edges
        .iter()
        .zip(cache.iou.iter())
        .zip(cache.s_ft.iter())
        .map(|((de, io), sf)| de * (io - sf))
        .sum();
    let g_w_raw = d_w * cache.w * (1.0 - cache.w);
    let d_s_ft = d_edges.mapv(|v| v * (1.0 - cache.w));

    // Row normalization of s_raw (exact, no guard).
    let mut d_s_raw = Array2::zeros((m, n));
    for i in 0..m {
        let r = cache.row_norms[i];
        let sr = cache.s_raw.row(i);
        let ds = d_s_ft.row(i);
        let dot: f64 = sr.iter().zip(ds).map(|(a, b)| a * b).sum();
        for j in 0..n {
            d_s_raw[(i, j)] = ds[j] / r - sr[j] * dot / (r * r * r);
        }
    }

    // s_raw = 1 / (dist + eps), dist = ||fd_i - ft_j||
    for i in 0..m {
        for j in 0..n {
            let denom = cache.dist[(i, j)] + DIST_EPS;
            let d_dist = -d_s_raw[(i, j)] / (denom * denom);
            if cache.dist[(i, j)] > 1e-12 {
                let scale = d_dist / cache.dist[(i, j)];
                for k in 0..d {
                    let diff = cache.fd[(i, k)] - cache.ft[(j, k)];
                    g_fd[(i, k)] += scale * diff;
                    g_ft[(j, k)] -= scale * diff;
                }
            }
        }
    }

    Ok(AgnnGrads { w1: g_w1, w2: g_w2, wa: g_wa, w_raw: g_w_raw, fd: g_fd, ft: g_ft })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_instance(
        m: usize,
        n: usize,
        d: usize,
        rng: &mut ChaCha8Rng,
    ) -> (Array2<f64>, Array2<f64>, EdgeMatrix, AgnnParams) {
        let fd = Array2::from_shape_fn((m, d), |_| rng.gen_range(-1.0..1.0));
        let ft = Array2::from_shape_fn((n, d), |_| rng.gen_range(-1.0..1.0));
        let iou = Array2::from_shape_fn((m, n), |_| rng.gen_range(0.0..1.0));
        let params = AgnnParams::init(d, rng);
        (fd, ft, iou, params)
    }

    #[test]
    fn initial_similarity_single_identical_pair() {
        let f = Array2::from_shape_vec((1, 2), vec![0.3, -0.4]).unwrap();
        let s = initial_similarity(&f, &f);
        assert_abs_diff_eq!(s[(0, 0)], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn initial_similarity_equidistant() {
        let fd = Array2::from_shape_vec((1, 2), vec![0.0, 0.0]).unwrap();
        let ft = Array2::from_shape_vec((2, 2), vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let s = initial_similarity(&fd, &ft);
        assert_abs_diff_eq!(s[(0, 0)], 0.707106781186, epsilon = 1e-5);
        assert_abs_diff_eq!(s[(0, 1)], 0.707106781186, epsilon = 1e-5);
    }

    #[test]
    fn initial_similarity_scalar_oracle() {
        // distances sqrt(2) and 2 give raw (1/sqrt2, 1/2); row-normalize.
        let fd = Array2::from_shape_vec((1, 2), vec![1.0, 0.0]).unwrap();
        let ft = Array2::from_shape_vec((2, 2), vec![0.0, 1.0, 3.0, 0.0]).unwrap();
        let s = initial_similarity(&fd, &ft);
        assert_abs_diff_eq!(s[(0, 0)], 0.81650, epsilon = 1e-5);
        assert_abs_diff_eq!(s[(0, 1)], 0.57735, epsilon = 1e-5);
    }

    #[test]
    fn initial_similarity_rows_unit_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let fd = Array2::from_shape_fn((4, 6), |_| rng.gen_range(-2.0..2.0));
            let ft = Array2::from_shape_fn((5, 6), |_| rng.gen_range(-2.0..2.0));
            let s = initial_similarity(&fd, &ft);
            for row in s.rows() {
                let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
                assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn prior_edges_convex_mix() {
        let one = Array2::from_elem((1, 1), 1.0);
        let e = prior_edges(&one, &one, 0.5).unwrap();
        assert_abs_diff_eq!(e[(0, 0)], 1.0, epsilon = 1e-15);

        let s = Array2::from_elem((1, 1), 0.81650);
        let io = Array2::from_elem((1, 1), 0.33333);
        let e = prior_edges(&s, &io, 0.5).unwrap();
        assert_abs_diff_eq!(e[(0, 0)], 0.574915, epsilon = 1e-6);

        // w -> 1 recovers the IOU matrix.
        let e = prior_edges(&s, &io, 1.0).unwrap();
        assert_abs_diff_eq!(e[(0, 0)], 0.33333, epsilon = 1e-12);
    }

    #[test]
    fn prior_edges_shape_mismatch() {
        let a = Array2::zeros((2, 3));
        let b = Array2::zeros((3, 2));
        assert!(prior_edges(&a, &b, 0.5).is_err());
    }

    #[test]
    fn forward_scalar_oracle() {
        // M=N=D=1, f_d=f_t=1, IOU=1, W1=W2=1, Wa=0, w=0.5:
        // E=1, aggregation 1, pre = 1 + 0.5*1 = 1.5, normalized to 1.
        let f = Array2::from_elem((1, 1), 1.0);
        let iou = Array2::from_elem((1, 1), 1.0);
        let params = AgnnParams {
            w1: Array2::from_elem((1, 1), 1.0),
            w2: Array2::from_elem((1, 1), 1.0),
            wa: Array2::from_elem((1, 1), 0.0),
            w_raw: 0.0,
        };
        let (s, cache) = forward(&f, &f, &iou, &params).unwrap();
        assert_abs_diff_eq!(cache.pre_d[(0, 0)], 1.5, epsilon = 1e-12);
        assert_abs_diff_eq!(s[(0, 0)], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn forward_zero_tracklet_features() {
        // With Ft = 0, W2's input on the detection side is E*0 = 0, so
        // pre_d reduces to Fd W1 = Fd for identity W1.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let fd = Array2::from_shape_fn((3, 4), |_| rng.gen_range(0.1..1.0));
        let ft = Array2::zeros((2, 4));
        let iou = Array2::from_shape_fn((3, 2), |_| rng.gen_range(0.0..1.0));
        let params = AgnnParams {
            w1: Array2::eye(4),
            w2: Array2::from_shape_fn((4, 4), |_| rng.gen_range(-1.0..1.0)),
            wa: Array2::zeros((4, 4)),
            w_raw: 0.0,
        };
        let (_, cache) = forward(&fd, &ft, &iou, &params).unwrap();
        for i in 0..3 {
            for k in 0..4 {
                assert_abs_diff_eq!(cache.pre_d[(i, k)], fd[(i, k)], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn identical_rows_give_similarity_one() {
        // Same feature row on both sides with a symmetric single-pair
        // instance: aggregated inputs coincide, so S_out hits 1.
        let f = Array2::from_shape_vec((1, 3), vec![0.5, 1.0, 0.25]).unwrap();
        let iou = Array2::from_elem((1, 1), 0.8);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let params = AgnnParams::init(3, &mut rng);
        let (s, _) = forward(&f, &f, &iou, &params).unwrap();
        assert_abs_diff_eq!(s[(0, 0)], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn output_entries_in_unit_interval() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (fd, ft, iou, params) = random_instance(4, 5, 6, &mut rng);
            let (s, _) = forward(&fd, &ft, &iou, &params).unwrap();
            for v in s.iter() {
                assert!((0.0..=1.0 + 1e-12).contains(v), "S_out entry {v}");
            }
        }
    }

    #[test]
    fn forward_permutation_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let (fd, ft, iou, params) = random_instance(4, 3, 5, &mut rng);
        let (s, _) = forward(&fd, &ft, &iou, &params).unwrap();

        let perm_rows = [2usize, 0, 3, 1];
        let fd_p = Array2::from_shape_fn(fd.raw_dim(), |(i, j)| fd[(perm_rows[i], j)]);
        let iou_p = Array2::from_shape_fn(iou.raw_dim(), |(i, j)| iou[(perm_rows[i], j)]);
        let (s_p, _) = forward(&fd_p, &ft, &iou_p, &params).unwrap();
        for i in 0..4 {
            for j in 0..3 {
                assert_abs_diff_eq!(s_p[(i, j)], s[(perm_rows[i], j)], epsilon = 1e-12);
            }
        }

        let perm_cols = [1usize, 2, 0];
        let ft_p = Array2::from_shape_fn(ft.raw_dim(), |(i, j)| ft[(perm_cols[i], j)]);
        let iou_c = Array2::from_shape_fn(iou.raw_dim(), |(i, j)| iou[(i, perm_cols[j])]);
        let (s_c, _) = forward(&fd, &ft_p, &iou_c, &params).unwrap();
        for i in 0..4 {
            for j in 0..3 {
                assert_abs_diff_eq!(s_c[(i, j)], s[(i, perm_cols[j])], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn backward_zero_upstream_gives_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (fd, ft, iou, params) = random_instance(2, 3, 4, &mut rng);
        let (s, cache) = forward(&fd, &ft, &iou, &params).unwrap();
        let grads = backward(&cache, &params, &Array2::zeros(s.raw_dim())).unwrap();
        assert!(grads.w1.iter().all(|v| *v == 0.0));
        assert!(grads.w2.iter().all(|v| *v == 0.0));
        assert!(grads.wa.iter().all(|v| *v == 0.0));
        assert_eq!(grads.w_raw, 0.0);
        assert!(grads.fd.iter().all(|v| *v == 0.0));
        assert!(grads.ft.iter().all(|v| *v == 0.0));
    }

    /// Scalar objective used by the finite-difference checks: a fixed
    /// random weighting of S_out entries.
    fn objective(
        fd: &Array2<f64>,
        ft: &Array2<f64>,
        iou: &EdgeMatrix,
        params: &AgnnParams,
        weights: &Array2<f64>,
    ) -> f64 {
        let (s, _) = forward(fd, ft, iou, params).unwrap();
        s.iter().zip(weights.iter()).map(|(a, b)| a * b).sum()
    }

    fn check_grad(analytic: f64, numeric: f64, what: &str) {
        let rel = (analytic - numeric).abs() / numeric.abs().max(1e-6);
        assert!(rel < 1e-4, "{what}: analytic {analytic} vs numeric {numeric} (rel {rel})");
    }

    #[test]
    fn backward_matches_finite_differences() {
        let h = 1e-5;
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
            let (mut fd, mut ft, iou, mut params) = random_instance(2, 3, 4, &mut rng);
            let weights = Array2::from_shape_fn((2, 3), |_| rng.gen_range(-1.0..1.0));
            let (_, cache) = forward(&fd, &ft, &iou, &params).unwrap();
            let grads = backward(&cache, &params, &weights).unwrap();

            let fd_num = |f: &mut dyn FnMut(f64) -> f64, x: f64| -> f64 {
                (f(x + h) - f(x - h)) / (2.0 * h)
            };

            for r in 0..4 {
                for c in 0..4 {
                    for (mat_idx, analytic) in
                        [(0, grads.w1[(r, c)]), (1, grads.w2[(r, c)]), (2, grads.wa[(r, c)])]
                    {
                        let orig = match mat_idx {
                            0 => params.w1[(r, c)],
                            1 => params.w2[(r, c)],
                            _ => params.wa[(r, c)],
                        };
                        let mut eval = |x: f64| {
                            match mat_idx {
                                0 => params.w1[(r, c)] = x,
                                1 => params.w2[(r, c)] = x,
                                _ => params.wa[(r, c)] = x,
                            }
                            let v = objective(&fd, &ft, &iou, &params, &weights);
                            match mat_idx {
                                0 => params.w1[(r, c)] = orig,
                                1 => params.w2[(r, c)] = orig,
                                _ => params.wa[(r, c)] = orig,
                            }
                            v
                        };
                        let numeric = fd_num(&mut eval, orig);
                        check_grad(analytic, numeric, &format!("W{mat_idx}[{r},{c}]"));
                    }
                }
            }

            let orig = params.w_raw;
            let mut eval = |x: f64| {
                params.w_raw = x;
                let v = objective(&fd, &ft, &iou, &params, &weights);
                params.w_raw = orig;
                v
            };
            check_grad(grads.w_raw, fd_num(&mut eval, orig), "w_raw");

            for i in 0..2 {
                for k in 0..4 {
                    let orig = fd[(i, k)];
                    let mut eval = |x: f64| {
                        fd[(i, k)] = x;
                        let v = objective(&fd, &ft, &iou, &params, &weights);
                        fd[(i, k)] = orig;
                        v
                    };
                    check_grad(grads.fd[(i, k)], fd_num(&mut eval, orig), &format!("Fd[{i},{k}]"));
                }
            }
            for j in 0..3 {
                for k in 0..4 {
                    let orig = ft[(j, k)];
                    let mut eval = |x: f64| {
                        ft[(j, k)] = x;
                        let v = objective(&fd, &ft, &iou, &params, &weights);
                        ft[(j, k)] = orig;
                        v
                    };
                    check_grad(grads.ft[(j, k)], fd_num(&mut eval, orig), &format!("Ft[{j},{k}]"));
                }
            }
        }
    }

    #[test]
    fn w_raw_gradient_flips_when_cues_swap() {
        // Objective rewards the (0,0) entry. Build an instance where IOU
        // favors the pairing and S_ft does not; swapping the two flips
        // the sign of the mixing-weight gradient.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let fd = Array2::from_shape_fn((1, 3), |_| rng.gen_range(0.2..1.0));
        let ft = Array2::from_shape_fn((2, 3), |_| rng.gen_range(0.2..1.0));
        let params = AgnnParams::init(3, &mut rng);
        let weights = {
            let mut w = Array2::zeros((1, 2));
            w[(0, 0)] = 1.0;
            w
        };
        let iou_hi = Array2::from_shape_vec((1, 2), vec![0.95, 0.05]).unwrap();
        let iou_lo = Array2::from_shape_vec((1, 2), vec![0.05, 0.95]).unwrap();

        let grad_for = |iou: &EdgeMatrix| {
            let (_, cache) = forward(&fd, &ft, iou, &params).unwrap();
            backward(&cache, &params, &weights).unwrap().w_raw
        };
        let g_hi = grad_for(&iou_hi);
        let g_lo = grad_for(&iou_lo);
        assert!(
            g_hi.signum() != g_lo.signum(),
            "expected sign flip, got {g_hi} and {g_lo}"
        );
        // Sanity against finite differences in both configurations.
        let h = 1e-6;
        for (iou, g) in [(&iou_hi, g_hi), (&iou_lo, g_lo)] {
            let mut p = params.clone();
            p.w_raw += h;
            let up = objective(&fd, &ft, iou, &p, &weights);
            p.w_raw -= 2.0 * h;
            let down = objective(&fd, &ft, iou, &p, &weights);
            check_grad(g, (up - down) / (2.0 * h), "w_raw sign case");
        }
    }

    #[test]
    fn stale_cache_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (fd, ft, iou, params) = random_instance(2, 3, 4, &mut rng);
        let (_, cache) = forward(&fd, &ft, &iou, &params).unwrap();
        assert!(matches!(
            backward(&cache, &params, &Array2::zeros((3, 2))),
            Err(AgnnError::StaleCache)
        ));
    }
}
