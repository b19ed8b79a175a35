//! Margin-augmented Hungarian association.
//!
//! The similarity matrix is extended on the right with an M x M block of
//! constant `margin`; a detection assigned into that block matches no
//! tracklet and becomes a new object with id max{id}+1, +2, ... in
//! detection order.

use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AssocError {
    #[error("{rows} rows exceed {cols} columns")]
    TooManyRows { rows: usize, cols: usize },
    #[error("margin {0} outside (0,1)")]
    BadMargin(f64),
    #[error("{ids} tracklet ids for {cols} similarity columns")]
    IdCountMismatch { ids: usize, cols: usize },
}

/// Maximum-total-similarity assignment of every row to a distinct column
/// (requires rows <= columns). Kuhn-Munkres with potentials on the
/// negated matrix; exact, deterministic, lowest column index on ties.
pub fn hungarian_max(sim: &Array2<f64>) -> Result<Vec<(usize, usize)>, AssocError> {
    let (rows, cols) = sim.dim();
    if rows > cols {
        return Err(AssocError::TooManyRows { rows, cols });
    }
    if rows == 0 {
        return Ok(Vec::new());
    }
    // Minimize (maxval - sim).
    let maxval = sim.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let cost = |i: usize, j: usize| maxval - sim[(i, j)];

    // Shortest augmenting paths with dual potentials, 1-indexed.
    let inf = f64::INFINITY;
    let mut u = vec![0.0; rows + 1];
    let mut v = vec![0.0; cols + 1];
    let mut assigned_row = vec![0usize; cols + 1]; // column -> row (0 = free)
    let mut way = vec![0usize; cols + 1];
    for i in 1..=rows {
        assigned_row[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = assigned_row[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=cols {
                if !used[j] {
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=cols {
                if used[j] {
                    u[assigned_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if assigned_row[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            assigned_row[j0] = assigned_row[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut pairs = Vec::with_capacity(rows);
    for j in 1..=cols {
        if assigned_row[j] != 0 {
            pairs.push((assigned_row[j] - 1, j - 1));
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// Outcome for one detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectionOutcome {
    /// Index into the tracklet list (not the id).
    Matched(usize),
    /// Freshly assigned identity.
    NewObject(u64),
}

/// Per-detection outcomes plus which tracklets were matched.
#[derive(Debug, Clone)]
pub struct AssignmentResult {
    pub detections: Vec<DetectionOutcome>,
    pub tracklet_matched: Vec<bool>,
}

/// Runs the augmented assignment. `next_id` is max{id}+1; new objects
/// receive next_id, next_id+1, ... in detection-index order.
pub fn match_detections(
    s_out: &Array2<f64>,
    margin: f64,
    next_id: u64,
    tracklet_count: usize,
) -> Result<AssignmentResult, AssocError> {
    if !(0.0..1.0).contains(&margin) || margin <= 0.0 {
        return Err(AssocError::BadMargin(margin));
    }
    if s_out.ncols() != tracklet_count {
        return Err(AssocError::IdCountMismatch { ids: tracklet_count, cols: s_out.ncols() });
    }
    let (m, n) = s_out.dim();
    if m == 0 {
        return Ok(AssignmentResult {
            detections: Vec::new(),
            tracklet_matched: vec![false; n],
        });
    }
    let mut aug = Array2::from_elem((m, n + m), margin);
    aug.slice_mut(ndarray::s![.., ..n]).assign(s_out);
    let pairs = hungarian_max(&aug)?;

    let mut detections = vec![DetectionOutcome::NewObject(0); m];
    let mut tracklet_matched = vec![false; n];
    let mut fresh = next_id;
    for (i, j) in pairs {
        if j < n {
            detections[i] = DetectionOutcome::Matched(j);
            tracklet_matched[j] = true;
        }
    }
    for slot in detections.iter_mut() {
        if let DetectionOutcome::NewObject(id) = slot {
            *id = fresh;
            fresh += 1;
        }
    }
    Ok(AssignmentResult { detections, tracklet_matched })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive oracle: best total over all row-to-column injections.
    pub(crate) fn brute_force_max(sim: &Array2<f64>) -> f64 {
        fn rec(sim: &Array2<f64>, row: usize, used: &mut Vec<bool>) -> f64 {
            if row == sim.nrows() {
                return 0.0;
            }
            let mut best = f64::NEG_INFINITY;
            for j in 0..sim.ncols() {
                if !used[j] {
                    used[j] = true;
                    let v = sim[(row, j)] + rec(sim, row + 1, used);
                    used[j] = false;
                    best = best.max(v);
                }
            }
            best
        }
        rec(sim, 0, &mut vec![false; sim.ncols()])
    }

    #[test]
    fn identity_matrix_assigns_diagonal() {
        let pairs = hungarian_max(&array![[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(pairs, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn crossed_assignment() {
        let pairs = hungarian_max(&array![[0.9, 0.8], [0.85, 0.1]]).unwrap();
        assert_eq!(pairs, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn rectangular_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let m = rng.gen_range(1..=5);
            let k = rng.gen_range(m..=7);
            let sim = Array2::from_shape_fn((m, k), |_| rng.gen_range(0.0..1.0));
            let pairs = hungarian_max(&sim).unwrap();
            assert_eq!(pairs.len(), m);
            let total: f64 = pairs.iter().map(|&(i, j)| sim[(i, j)]).sum();
            let best = brute_force_max(&sim);
            assert!((total - best).abs() < 1e-9, "{total} vs {best}");
            let mut cols: Vec<_> = pairs.iter().map(|p| p.1).collect();
            cols.sort_unstable();
            cols.dedup();
            assert_eq!(cols.len(), m);
        }
    }

    #[test]
    fn too_many_rows_rejected() {
        assert!(matches!(
            hungarian_max(&Array2::zeros((3, 2))),
            Err(AssocError::TooManyRows { .. })
        ));
    }

    #[test]
    fn low_similarity_becomes_new_object() {
        let r = match_detections(&array![[0.1]], 0.2, 7, 1).unwrap();
        assert_eq!(r.detections, vec![DetectionOutcome::NewObject(7)]);
        assert_eq!(r.tracklet_matched, vec![false]);
    }

    #[test]
    fn high_similarity_matches() {
        let r = match_detections(&array![[0.9]], 0.2, 7, 1).unwrap();
        assert_eq!(r.detections, vec![DetectionOutcome::Matched(0)]);
        assert_eq!(r.tracklet_matched, vec![true]);
    }

    #[test]
    fn eight_by_ten_two_new_rows() {
        // Rows 2 and 7 (0-based) sit uniformly below the margin; each
        // other row has one dominant distinct column.
        let mut s = Array2::from_elem((8, 10), 0.01);
        let dominant_cols = [0usize, 1, 2, 3, 4, 5];
        let strong_rows = [0usize, 1, 3, 4, 5, 6];
        for (r, c) in strong_rows.iter().zip(dominant_cols) {
            s[(*r, c)] = 0.9;
        }
        let r = match_detections(&s, 0.2, 11, 10).unwrap();
        assert_eq!(r.detections[2], DetectionOutcome::NewObject(11));
        assert_eq!(r.detections[7], DetectionOutcome::NewObject(12));
        for (row, col) in strong_rows.iter().zip(dominant_cols) {
            assert_eq!(r.detections[*row], DetectionOutcome::Matched(col));
        }
    }

    #[test]
    fn below_margin_row_is_always_new() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=5);
            let mut s = Array2::from_shape_fn((m, n), |_| rng.gen_range(0.0..1.0));
            let weak = rng.gen_range(0..m);
            for j in 0..n {
                s[(weak, j)] = rng.gen_range(0.0..0.19);
            }
            let r = match_detections(&s, 0.2, 100, n).unwrap();
            assert!(matches!(r.detections[weak], DetectionOutcome::NewObject(_)));
        }
    }

    #[test]
    fn new_ids_contiguous_and_tracklets_unique() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..50 {
            let m = rng.gen_range(1..=5);
            let n = rng.gen_range(0..=5);
            let s = Array2::from_shape_fn((m, n), |_| rng.gen_range(0.0..1.0));
            let r = match_detections(&s, 0.2, 50, n).unwrap();
            let mut seen_tracklets = std::collections::HashSet::new();
            let mut expected_new = 50u64;
            for out in &r.detections {
                match out {
                    DetectionOutcome::Matched(j) => {
                        assert!(seen_tracklets.insert(*j));
                    }
                    DetectionOutcome::NewObject(id) => {
                        assert_eq!(*id, expected_new);
                        expected_new += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn invariant_to_below_margin_padding_columns() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=4);
            let s = Array2::from_shape_fn((m, n), |_| rng.gen_range(0.0..1.0));
            let base = match_detections(&s, 0.2, 10, n).unwrap();

            let extra = rng.gen_range(1..=3);
            let mut padded = Array2::from_shape_fn((m, n + extra), |(i, j)| {
                if j < n {
                    s[(i, j)]
                } else {
                    rng.gen_range(0.0..0.19)
                }
            });
            padded.slice_mut(ndarray::s![.., ..n]).assign(&s);
            let aug = match_detections(&padded, 0.2, 10, n + extra).unwrap();
            for (a, b) in base.detections.iter().zip(&aug.detections) {
                match (a, b) {
                    (DetectionOutcome::Matched(x), DetectionOutcome::Matched(y)) => {
                        assert_eq!(x, y)
                    }
                    (DetectionOutcome::NewObject(_), DetectionOutcome::NewObject(_)) => {}
                    other => panic!("outcome changed under padding: {other:?}"),
                }
            }
            for j in n..n + extra {
                assert!(!aug.tracklet_matched[j]);
            }
        }
    }

    #[test]
    fn bad_margin_rejected() {
        let s = array![[0.5]];
        assert!(match_detections(&s, 0.0, 0, 1).is_err());
        assert!(match_detections(&s, 1.0, 0, 1).is_err());
    }
}
