//! Balanced MSE loss.
//!
//! Plain MSE over the similarity matrix is dominated by continuing
//! negative pairs; new and disappeared objects are rare and each tracklet
//! has at most one positive. Four per-category coefficients rebalance the
//! squared errors, with an L2 penalty on the weight matrices on top.

use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LossError {
    #[error("label matrix is not a partial assignment: {0}")]
    BadLabels(String),
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),
}

/// M x N 0/1 ground-truth assignment; at most one 1 per row and column.
#[derive(Debug, Clone)]
pub struct LabelMatrix {
    pub values: Array2<f64>,
}

impl LabelMatrix {
    pub fn new(values: Array2<f64>) -> Result<Self, LossError> {
        for v in values.iter() {
            if *v != 0.0 && *v != 1.0 {
                return Err(LossError::BadLabels(format!("entry {v} not in {{0,1}}")));
            }
        }
        for (i, row) in values.rows().into_iter().enumerate() {
            if row.sum() > 1.0 {
                return Err(LossError::BadLabels(format!("row {i} has multiple matches")));
            }
        }
        for (j, col) in values.columns().into_iter().enumerate() {
            if col.sum() > 1.0 {
                return Err(LossError::BadLabels(format!("column {j} has multiple matches")));
            }
        }
        Ok(Self { values })
    }

    pub fn dim(&self) -> (usize, usize) {
        self.values.dim()
    }
}

/// Per-category balancing coefficients and the regularization strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossWeights {
    /// Continuing negative pairs.
    pub alpha: f64,
    /// Continuing positive pairs.
    pub beta: f64,
    /// New objects (all-zero rows).
    pub gamma: f64,
    /// Disappeared objects (all-zero columns).
    pub delta: f64,
    /// L2 regularization.
    pub epsilon: f64,
}

impl Default for LossWeights {
    fn default() -> Self {
        Self { alpha: 25.0, beta: 1.0, gamma: 50.0, delta: 50.0, epsilon: 0.01 }
    }
}

/// The four 0/1 category masks. `new` is constant along each row,
/// `disap` along each column; the continuing masks exclude both.
#[derive(Debug, Clone)]
pub struct SampleMasks {
    pub cont_neg: Array2<f64>,
    pub cont_pos: Array2<f64>,
    pub new: Array2<f64>,
    pub disap: Array2<f64>,
}

/// Derives the category masks from a label matrix: an all-zero row marks
/// a new object, an all-zero column a disappeared one.
pub fn build_masks(labels: &LabelMatrix) -> SampleMasks {
    let (m, n) = labels.dim();
    let row_zero: Vec<bool> = labels.values.rows().into_iter().map(|r| r.sum() == 0.0).collect();
    let col_zero: Vec<bool> =
        labels.values.columns().into_iter().map(|c| c.sum() == 0.0).collect();
    let mut new = Array2::zeros((m, n));
    let mut disap = Array2::zeros((m, n));
    let mut cont_pos = Array2::zeros((m, n));
    let mut cont_neg = Array2::zeros((m, n));
    for i in 0..m {
        for j in 0..n {
            if row_zero[i] {
                new[(i, j)] = 1.0;
            }
            if col_zero[j] {
                disap[(i, j)] = 1.0;
            }
            if !row_zero[i] && !col_zero[j] {
                if labels.values[(i, j)] == 1.0 {
                    cont_pos[(i, j)] = 1.0;
                } else {
                    cont_neg[(i, j)] = 1.0;
                }
            }
        }
    }
    SampleMasks { cont_neg, cont_pos, new, disap }
}

/// Balanced MSE: loss value and its gradient with respect to the
/// predicted similarity matrix.
///
/// `reg_norm_sq` is the squared L2 norm of the trainable weight matrices
/// (the mixing logit and biases excluded); its gradient is handled by the
/// caller since it does not flow through the similarity matrix.
pub fn bmse(
    s_hat: &Array2<f64>,
    labels: &LabelMatrix,
    masks: &SampleMasks,
    wts: &LossWeights,
    reg_norm_sq: f64,
) -> Result<(f64, Array2<f64>), LossError> {
    if s_hat.dim() != labels.dim() {
        return Err(LossError::ShapeMismatch(s_hat.dim(), labels.dim()));
    }
    let coef = wts.alpha * &masks.cont_neg
        + wts.beta * &masks.cont_pos
        + wts.gamma * &masks.new
        + wts.delta * &masks.disap;
    let resid = s_hat - &labels.values;
    let loss = (&coef * &resid * &resid).sum() + wts.epsilon * reg_norm_sq;
    let grad = 2.0 * &coef * &resid;
    Ok((loss, grad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn masks_identity_labels() {
        let labels = LabelMatrix::new(array![[1.0, 0.0], [0.0, 1.0]]).unwrap();
        let m = build_masks(&labels);
        assert_eq!(m.cont_pos, array![[1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(m.cont_neg, array![[0.0, 1.0], [1.0, 0.0]]);
        assert_eq!(m.new.sum(), 0.0);
        assert_eq!(m.disap.sum(), 0.0);
    }

    #[test]
    fn masks_single_zero_entry_is_new_and_disap() {
        let labels = LabelMatrix::new(array![[0.0]]).unwrap();
        let m = build_masks(&labels);
        assert_eq!(m.new[(0, 0)], 1.0);
        assert_eq!(m.disap[(0, 0)], 1.0);
        assert_eq!(m.cont_pos[(0, 0)], 0.0);
        assert_eq!(m.cont_neg[(0, 0)], 0.0);
    }

    #[test]
    fn masks_eight_by_ten_two_new_rows() {
        // Rows 3 and 8 (1-based) are new; with 6 matched pairs, exactly
        // 4 columns are uncovered, of which 2 are picked as disappeared
        // by leaving them all-zero among the first 8 columns.
        let mut v = Array2::zeros((8, 10));
        let matched_rows = [0usize, 1, 3, 4, 5, 6];
        let matched_cols = [0usize, 1, 2, 3, 4, 5];
        for (r, c) in matched_rows.iter().zip(matched_cols) {
            v[(*r, c)] = 1.0;
        }
        let labels = LabelMatrix::new(v).unwrap();
        let m = build_masks(&labels);
        for j in 0..10 {
            assert_eq!(m.new[(2, j)], 1.0);
            assert_eq!(m.new[(7, j)], 1.0);
        }
        assert_eq!(m.new.sum(), 20.0);
        // Columns 6..10 are all-zero: 4 disappeared columns of 8 rows.
        assert_eq!(m.disap.sum(), 32.0);
        for i in 0..8 {
            for j in 6..10 {
                assert_eq!(m.disap[(i, j)], 1.0);
            }
        }
    }

    #[test]
    fn masks_partition_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (mm, nn) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let mut v = Array2::zeros((mm, nn));
            // Random partial assignment.
            let mut used_cols = vec![false; nn];
            for i in 0..mm {
                if rng.gen_bool(0.7) {
                    let j = rng.gen_range(0..nn);
                    if !used_cols[j] {
                        used_cols[j] = true;
                        v[(i, j)] = 1.0;
                    }
                }
            }
            let labels = LabelMatrix::new(v).unwrap();
            let m = build_masks(&labels);
            for i in 0..mm {
                for j in 0..nn {
                    let cp = m.cont_pos[(i, j)];
                    let cn = m.cont_neg[(i, j)];
                    let nw = m.new[(i, j)];
                    let dp = m.disap[(i, j)];
                    // cont masks disjoint and excluded under new/disap.
                    assert!(cp * cn == 0.0);
                    if nw == 1.0 || dp == 1.0 {
                        assert_eq!(cp + cn, 0.0);
                    }
                    // Every entry carries at least one category.
                    assert!(cp + cn + nw + dp >= 1.0);
                }
            }
        }
    }

    #[test]
    fn invalid_labels_rejected() {
        assert!(LabelMatrix::new(array![[1.0, 1.0]]).is_err());
        assert!(LabelMatrix::new(array![[1.0], [1.0]]).is_err());
        assert!(LabelMatrix::new(array![[0.5]]).is_err());
    }

    #[test]
    fn bmse_zero_residual_keeps_regularizer() {
        let labels = LabelMatrix::new(array![[1.0, 0.0], [0.0, 1.0]]).unwrap();
        let masks = build_masks(&labels);
        let wts = LossWeights::default();
        let (loss, grad) =
            bmse(&labels.values.clone(), &labels, &masks, &wts, 3.0).unwrap();
        assert_abs_diff_eq!(loss, 0.01 * 3.0, epsilon = 1e-15);
        assert!(grad.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn bmse_scalar_cases() {
        let wts = LossWeights::default();
        // Single continuing positive entry, Ŝ = 0.8 vs 1.
        let labels = LabelMatrix::new(array![[1.0]]).unwrap();
        let masks = build_masks(&labels);
        let (loss, grad) = bmse(&array![[0.8]], &labels, &masks, &wts, 0.0).unwrap();
        assert_abs_diff_eq!(loss, 0.04, epsilon = 1e-12);
        assert_abs_diff_eq!(grad[(0, 0)], 2.0 * 1.0 * (-0.2), epsilon = 1e-12);

        // Single new-row entry: that 1x1 zero matrix is also a
        // disappeared column, so the coefficient is gamma + delta.
        let labels = LabelMatrix::new(array![[0.0]]).unwrap();
        let masks = build_masks(&labels);
        let (loss, _) = bmse(&array![[0.3]], &labels, &masks, &wts, 0.0).unwrap();
        assert_abs_diff_eq!(loss, (50.0 + 50.0) * 0.09, epsilon = 1e-12);

        // A genuine new row without column overlap: 1x2 with one match.
        let labels = LabelMatrix::new(array![[0.0, 0.0], [0.0, 1.0]]).unwrap();
        let masks = build_masks(&labels);
        let s = array![[0.3, 0.0], [0.0, 1.0]];
        let (loss, _) = bmse(&s, &labels, &masks, &wts, 0.0).unwrap();
        // Entry (0,0): new row crossing the all-zero column 0 -> gamma+delta;
        // entry (0,1): new only; entry (1,0): disap only, residual 0.
        assert_abs_diff_eq!(loss, (50.0 + 50.0) * 0.09, epsilon = 1e-12);
    }

    #[test]
    fn bmse_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut v = Array2::zeros((3, 4));
        v[(0, 1)] = 1.0;
        v[(2, 3)] = 1.0;
        let labels = LabelMatrix::new(v).unwrap();
        let masks = build_masks(&labels);
        let wts = LossWeights::default();
        let mut s = Array2::from_shape_fn((3, 4), |_| rng.gen_range(0.0..1.0));
        let (_, grad) = bmse(&s, &labels, &masks, &wts, 1.0).unwrap();
        let h = 1e-7;
        for i in 0..3 {
            for j in 0..4 {
                let orig = s[(i, j)];
                s[(i, j)] = orig + h;
                let up = bmse(&s, &labels, &masks, &wts, 1.0).unwrap().0;
                s[(i, j)] = orig - h;
                let down = bmse(&s, &labels, &masks, &wts, 1.0).unwrap().0;
                s[(i, j)] = orig;
                let fd = (up - down) / (2.0 * h);
                let rel = (grad[(i, j)] - fd).abs() / fd.abs().max(1e-6);
                assert!(rel < 1e-6, "({i},{j}): {} vs {}", grad[(i, j)], fd);
            }
        }
    }

    #[test]
    fn bmse_shape_mismatch() {
        let labels = LabelMatrix::new(array![[1.0]]).unwrap();
        let masks = build_masks(&labels);
        assert!(bmse(&Array2::zeros((2, 2)), &labels, &masks, &LossWeights::default(), 0.0)
            .is_err());
    }
}
