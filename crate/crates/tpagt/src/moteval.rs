//! CLEAR-style tracking metrics: MOTA, IDF1, MT, ML, FP, FN, IDSW.

use crate::assoc::hungarian_max;
use crate::tracker::TrackRow;
use crate::types::{iou, BBox};
use ndarray::Array2;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("no ground truth boxes")]
    ZeroGroundTruth,
}

/// Accumulated counts over a sequence.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MetricCounts {
    pub fp: u64,
    pub fn_: u64,
    pub idsw: u64,
    pub gt_total: u64,
    /// Fraction of each ground-truth trajectory's frames that were matched.
    pub coverages: Vec<f64>,
}

/// Full metric set for one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    pub mota: f64,
    pub idf1: f64,
    pub mt: f64,
    pub ml: f64,
    pub fp: u64,
    pub fn_: u64,
    pub idsw: u64,
}

/// Matches one frame's ground truth against predictions by IOU
/// maximization; pairs below the threshold are dropped. Returns matched
/// (gt index, pred index) pairs plus FP and FN counts.
pub fn frame_match(
    gt_boxes: &[BBox],
    pred_boxes: &[BBox],
    iou_thresh: f64,
) -> (Vec<(usize, usize)>, u64, u64) {
    let (ng, np) = (gt_boxes.len(), pred_boxes.len());
    if ng == 0 || np == 0 {
        return (Vec::new(), np as u64, ng as u64);
    }
    let transposed = ng > np;
    let (rows, cols) = if transposed { (np, ng) } else { (ng, np) };
    let sim = Array2::from_shape_fn((rows, cols), |(r, c)| {
        let (g, p) = if transposed { (c, r) } else { (r, c) };
        iou(&gt_boxes[g], &pred_boxes[p])
    });
    let pairs = hungarian_max(&sim).expect("rows <= cols by construction");
    let mut matched = Vec::new();
    for (r, c) in pairs {
        if sim[(r, c)] >= iou_thresh {
            let (g, p) = if transposed { (c, r) } else { (r, c) };
            matched.push((g, p));
        }
    }
    let fp = (np - matched.len()) as u64;
    let fn_ = (ng - matched.len()) as u64;
    (matched, fp, fn_)
}

/// MOTA = 1 - (FP + FN + IDSW) / GT. May be negative.
pub fn mota(counts: &MetricCounts) -> Result<f64, EvalError> {
    if counts.gt_total == 0 {
        return Err(EvalError::ZeroGroundTruth);
    }
    Ok(1.0 - (counts.fp + counts.fn_ + counts.idsw) as f64 / counts.gt_total as f64)
}

/// Identity switches: counted whenever a ground-truth trajectory is
/// matched to a different prediction id than the last one it matched.
/// Gaps do not count unless the id differs on re-match.
pub fn idsw_count(per_frame: &[Vec<(u64, u64)>]) -> u64 {
    let mut last: HashMap<u64, u64> = HashMap::new();
    let mut switches = 0;
    for frame in per_frame {
        for (gt_id, pred_id) in frame {
            if let Some(prev) = last.insert(*gt_id, *pred_id) {
                if prev != *pred_id {
                    switches += 1;
                }
            }
        }
    }
    switches
}

/// Shares of trajectories mostly tracked (coverage >= 0.8) and mostly
/// lost (coverage <= 0.2).
pub fn mt_ml(coverages: &[f64]) -> (f64, f64) {
    if coverages.is_empty() {
        return (0.0, 0.0);
    }
    let n = coverages.len() as f64;
    let mt = coverages.iter().filter(|c| **c >= 0.8).count() as f64 / n;
    let ml = coverages.iter().filter(|c| **c <= 0.2).count() as f64 / n;
    (mt, ml)
}

fn group_by_frame(rows: &[TrackRow]) -> BTreeMap<u64, Vec<&TrackRow>> {
    let mut map: BTreeMap<u64, Vec<&TrackRow>> = BTreeMap::new();
    for r in rows {
        map.entry(r.frame).or_default().push(r);
    }
    map
}

/// Global identity F1: greedy-free one-to-one mapping of prediction ids
/// to ground-truth ids maximizing correctly identified detections.
pub fn idf1(gt_rows: &[TrackRow], pred_rows: &[TrackRow], iou_thresh: f64) -> Result<f64, EvalError> {
    if gt_rows.is_empty() {
        return Err(EvalError::ZeroGroundTruth);
    }
    if pred_rows.is_empty() {
        return Ok(0.0);
    }
    // Per-(gt id, pred id) count of frames where the pair overlaps.
    let gt_frames = group_by_frame(gt_rows);
    let pred_frames = group_by_frame(pred_rows);
    let mut overlap: HashMap<(u64, u64), u64> = HashMap::new();
    for (frame, gts) in &gt_frames {
        if let Some(preds) = pred_frames.get(frame) {
            for g in gts {
                for p in preds {
                    if iou(&g.bbox, &p.bbox) >= iou_thresh {
                        *overlap.entry((g.id, p.id)).or_default() += 1;
                    }
                }
            }
        }
    }
    let mut gt_ids: Vec<u64> = gt_rows.iter().map(|r| r.id).collect();
    gt_ids.sort_unstable();
    gt_ids.dedup();
    let mut pred_ids: Vec<u64> = pred_rows.iter().map(|r| r.id).collect();
    pred_ids.sort_unstable();
    pred_ids.dedup();

    let transposed = gt_ids.len() > pred_ids.len();
    let (row_ids, col_ids) =
        if transposed { (&pred_ids, &gt_ids) } else { (&gt_ids, &pred_ids) };
    let sim = Array2::from_shape_fn((row_ids.len(), col_ids.len()), |(r, c)| {
        let key = if transposed { (col_ids[c], row_ids[r]) } else { (row_ids[r], col_ids[c]) };
        *overlap.get(&key).unwrap_or(&0) as f64
    });
    let pairs = hungarian_max(&sim).expect("rows <= cols by construction");
    let idtp: f64 = pairs.iter().map(|&(r, c)| sim[(r, c)]).sum();
    let idfp = pred_rows.len() as f64 - idtp;
    let idfn = gt_rows.len() as f64 - idtp;
    Ok(2.0 * idtp / (2.0 * idtp + idfp + idfn))
}

/// Accumulates per-frame counts and trajectory coverages over a sequence.
pub fn accumulate(gt_rows: &[TrackRow], pred_rows: &[TrackRow], iou_thresh: f64) -> MetricCounts {
    let gt_frames = group_by_frame(gt_rows);
    let pred_frames = group_by_frame(pred_rows);
    let mut counts = MetricCounts::default();
    let mut correspondences: Vec<Vec<(u64, u64)>> = Vec::new();
    let mut gt_traj_total: BTreeMap<u64, u64> = BTreeMap::new();
    let mut gt_traj_matched: BTreeMap<u64, u64> = BTreeMap::new();

    let mut frames: Vec<u64> = gt_frames.keys().chain(pred_frames.keys()).cloned().collect();
    frames.sort_unstable();
    frames.dedup();
    for frame in frames {
        let gts = gt_frames.get(&frame).cloned().unwrap_or_default();
        let preds = pred_frames.get(&frame).cloned().unwrap_or_default();
        for g in &gts {
            *gt_traj_total.entry(g.id).or_default() += 1;
        }
        counts.gt_total += gts.len() as u64;
        let gt_boxes: Vec<BBox> = gts.iter().map(|r| r.bbox).collect();
        let pred_boxes: Vec<BBox> = preds.iter().map(|r| r.bbox).collect();
        let (pairs, fp, fn_) = frame_match(&gt_boxes, &pred_boxes, iou_thresh);
        counts.fp += fp;
        counts.fn_ += fn_;
        let mut frame_pairs = Vec::new();
        for (g, p) in pairs {
            *gt_traj_matched.entry(gts[g].id).or_default() += 1;
            frame_pairs.push((gts[g].id, preds[p].id));
        }
        correspondences.push(frame_pairs);
    }
    counts.idsw = idsw_count(&correspondences);
    counts.coverages = gt_traj_total
        .iter()
        .map(|(id, total)| *gt_traj_matched.get(id).unwrap_or(&0) as f64 / *total as f64)
        .collect();
    counts
}

/// Full evaluation of a predicted track file against ground truth.
pub fn evaluate(
    gt_rows: &[TrackRow],
    pred_rows: &[TrackRow],
    iou_thresh: f64,
) -> Result<Metrics, EvalError> {
    let counts = accumulate(gt_rows, pred_rows, iou_thresh);
    let mota_v = mota(&counts)?;
    let idf1_v = idf1(gt_rows, pred_rows, iou_thresh)?;
    let (mt, ml) = mt_ml(&counts.coverages);
    Ok(Metrics { mota: mota_v, idf1: idf1_v, mt, ml, fp: counts.fp, fn_: counts.fn_, idsw: counts.idsw })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn row(frame: u64, id: u64, l: f64, t: f64) -> TrackRow {
        TrackRow {
            frame,
            id,
            bbox: BBox::new(l, t, 10.0, 10.0).unwrap(),
            confidence: 1.0,
        }
    }

    #[test]
    fn frame_match_identical_sets() {
        let boxes = vec![
            BBox::new(0.0, 0.0, 10.0, 10.0).unwrap(),
            BBox::new(50.0, 50.0, 10.0, 10.0).unwrap(),
        ];
        let (pairs, fp, fn_) = frame_match(&boxes, &boxes, 0.5);
        assert_eq!(pairs.len(), 2);
        assert_eq!((fp, fn_), (0, 0));
    }

    #[test]
    fn frame_match_empty_gt() {
        let preds = vec![
            BBox::new(0.0, 0.0, 10.0, 10.0).unwrap(),
            BBox::new(20.0, 0.0, 10.0, 10.0).unwrap(),
            BBox::new(40.0, 0.0, 10.0, 10.0).unwrap(),
        ];
        let (pairs, fp, fn_) = frame_match(&[], &preds, 0.5);
        assert!(pairs.is_empty());
        assert_eq!((fp, fn_), (3, 0));
    }

    #[test]
    fn frame_match_crossed_matches_brute_force() {
        // Two gt, two preds; pairing must maximize total IOU.
        let gt = vec![
            BBox::new(0.0, 0.0, 10.0, 10.0).unwrap(),
            BBox::new(8.0, 0.0, 10.0, 10.0).unwrap(),
        ];
        let preds = vec![
            BBox::new(7.0, 0.0, 10.0, 10.0).unwrap(),
            BBox::new(1.0, 0.0, 10.0, 10.0).unwrap(),
        ];
        let (pairs, _, _) = frame_match(&gt, &preds, 0.3);
        let total: f64 = pairs.iter().map(|&(g, p)| iou(&gt[g], &preds[p])).sum();
        let alt: f64 = iou(&gt[0], &preds[0]) + iou(&gt[1], &preds[1]);
        let best = alt.max(iou(&gt[0], &preds[1]) + iou(&gt[1], &preds[0]));
        assert_abs_diff_eq!(total, best, epsilon = 1e-12);
    }

    #[test]
    fn mota_formula() {
        let c = MetricCounts { fp: 10, fn_: 20, idsw: 5, gt_total: 100, coverages: vec![] };
        assert_abs_diff_eq!(mota(&c).unwrap(), 0.65, epsilon = 1e-12);
        let perfect = MetricCounts { gt_total: 50, ..Default::default() };
        assert_eq!(mota(&perfect).unwrap(), 1.0);
        let all_missed = MetricCounts { fn_: 50, gt_total: 50, ..Default::default() };
        assert_eq!(mota(&all_missed).unwrap(), 0.0);
        assert!(mota(&MetricCounts::default()).is_err());
    }

    #[test]
    fn idf1_perfect_and_empty() {
        let gt: Vec<TrackRow> = (1..=5).map(|f| row(f, 1, 0.0, 0.0)).collect();
        assert_abs_diff_eq!(idf1(&gt, &gt, 0.5).unwrap(), 1.0, epsilon = 1e-12);
        assert_eq!(idf1(&gt, &[], 0.5).unwrap(), 0.0);
        assert!(idf1(&[], &gt, 0.5).is_err());
    }

    #[test]
    fn idf1_split_trajectory_half() {
        let gt: Vec<TrackRow> = (1..=10).map(|f| row(f, 1, 0.0, 0.0)).collect();
        let pred: Vec<TrackRow> = (1..=10)
            .map(|f| row(f, if f <= 5 { 10 } else { 20 }, 0.0, 0.0))
            .collect();
        assert_abs_diff_eq!(idf1(&gt, &pred, 0.5).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn idf1_invariant_under_pred_relabeling() {
        let gt: Vec<TrackRow> = (1..=6).map(|f| row(f, 3, 0.0, 0.0)).collect();
        let pred_a: Vec<TrackRow> = (1..=6).map(|f| row(f, 8, 0.0, 0.0)).collect();
        let pred_b: Vec<TrackRow> = (1..=6).map(|f| row(f, 99, 0.0, 0.0)).collect();
        assert_eq!(idf1(&gt, &pred_a, 0.5).unwrap(), idf1(&gt, &pred_b, 0.5).unwrap());
    }

    #[test]
    fn mt_ml_thresholds() {
        assert_eq!(mt_ml(&[1.0, 1.0]), (1.0, 0.0));
        assert_eq!(mt_ml(&[0.0, 0.0]), (0.0, 1.0));
        let (mt, ml) = mt_ml(&[0.85, 0.5, 0.1]);
        assert_abs_diff_eq!(mt, 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ml, 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn idsw_counting() {
        // Consistent ids: no switches.
        let consistent: Vec<Vec<(u64, u64)>> = (0..5).map(|_| vec![(1, 7)]).collect();
        assert_eq!(idsw_count(&consistent), 0);
        // One change mid-trajectory.
        let one: Vec<Vec<(u64, u64)>> =
            vec![vec![(1, 7)], vec![(1, 7)], vec![(1, 8)], vec![(1, 8)]];
        assert_eq!(idsw_count(&one), 1);
        // Flip every frame over L frames: L - 1 switches.
        let l = 9;
        let flip: Vec<Vec<(u64, u64)>> =
            (0..l).map(|f| vec![(1, (f % 2) as u64)]).collect();
        assert_eq!(idsw_count(&flip), l as u64 - 1);
        // Gap without id change is not a switch.
        let gap: Vec<Vec<(u64, u64)>> = vec![vec![(1, 7)], vec![], vec![(1, 7)]];
        assert_eq!(idsw_count(&gap), 0);
    }

    #[test]
    fn evaluate_perfect_tracking() {
        let gt: Vec<TrackRow> = (1..=5)
            .flat_map(|f| vec![row(f, 1, 0.0, 0.0), row(f, 2, 50.0, 50.0)])
            .collect();
        let m = evaluate(&gt, &gt, 0.5).unwrap();
        assert_eq!(m.mota, 1.0);
        assert_eq!(m.idf1, 1.0);
        assert_eq!(m.mt, 1.0);
        assert_eq!(m.ml, 0.0);
        assert_eq!((m.fp, m.fn_, m.idsw), (0, 0, 0));
    }

    #[test]
    fn evaluate_frame_order_invariant() {
        let gt: Vec<TrackRow> = (1..=4).map(|f| row(f, 1, f as f64, 0.0)).collect();
        let pred: Vec<TrackRow> = (1..=4).map(|f| row(f, 9, f as f64 + 1.0, 0.0)).collect();
        let mut gt_rev = gt.clone();
        gt_rev.reverse();
        let mut pred_rev = pred.clone();
        pred_rev.reverse();
        assert_eq!(evaluate(&gt, &pred, 0.5).unwrap(), evaluate(&gt_rev, &pred_rev, 0.5).unwrap());
    }
}
