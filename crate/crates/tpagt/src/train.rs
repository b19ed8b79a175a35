//! Training: Adam over the AGNN and embedding parameters, a
//! piecewise-constant cosine-annealed learning rate, and the per-frame-pair
//! epoch loop wiring feature extraction, the graph forward/backward and
//! the balanced MSE loss together.

use crate::agnn::{self, AgnnParams};
use crate::loss::{self, LabelMatrix, LossWeights};
use crate::roifeat::{self, EmbedParams, FeatureMap};
use crate::types::BBox;
use ndarray::{Array1, Array2};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("epoch {epoch} outside schedule range 0..={total}")]
    EpochOutOfRange { epoch: u64, total: u64 },
    #[error("gradient shape does not match parameter shape for {0}")]
    ShapeMismatch(&'static str),
    #[error("empty training batch")]
    EmptyBatch,
    #[error("agnn error: {0}")]
    Agnn(#[from] agnn::AgnnError),
    #[error("loss error: {0}")]
    Loss(#[from] loss::LossError),
    #[error("feature error: {0}")]
    Roi(#[from] roifeat::RoiError),
}

/// Cosine annealing refreshed every `period_epochs` over one arc of
/// `total_epochs`. Defaults follow the 0.05 -> 2.5e-7 over 3000 epochs
/// setup with a 30-epoch refresh cadence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LrSchedule {
    pub lr_max: f64,
    pub lr_min: f64,
    pub period_epochs: u64,
    pub total_epochs: u64,
}

impl Default for LrSchedule {
    fn default() -> Self {
        Self { lr_max: 0.05, lr_min: 2.5e-7, period_epochs: 30, total_epochs: 3000 }
    }
}

/// Learning rate at an epoch: constant within each period block, following
/// a single cosine arc from lr_max at 0 to lr_min at total_epochs.
pub fn lr_at(epoch: u64, sched: &LrSchedule) -> Result<f64, TrainError> {
    if epoch > sched.total_epochs {
        return Err(TrainError::EpochOutOfRange { epoch, total: sched.total_epochs });
    }
    let held = (epoch / sched.period_epochs) * sched.period_epochs;
    let phase = std::f64::consts::PI * held as f64 / sched.total_epochs as f64;
    Ok(sched.lr_min + 0.5 * (sched.lr_max - sched.lr_min) * (1.0 + phase.cos()))
}

/// Everything trainable: graph weights plus the embedding projection.
#[derive(Debug, Clone)]
pub struct ModelParams {
    pub agnn: AgnnParams,
    pub embed: EmbedParams,
}

impl ModelParams {
    pub fn init<R: rand::Rng>(channels: usize, pool: usize, dim: usize, rng: &mut R) -> Self {
        Self {
            agnn: AgnnParams::init(dim, rng),
            embed: EmbedParams::init(channels, pool, dim, rng),
        }
    }

    /// Squared L2 norm of the regularized weight matrices (W1, W2, Wa and
    /// the embedding projection; biases and the mixing logit excluded).
    pub fn reg_norm_sq(&self) -> f64 {
        let sq = |m: &Array2<f64>| m.iter().map(|v| v * v).sum::<f64>();
        sq(&self.agnn.w1) + sq(&self.agnn.w2) + sq(&self.agnn.wa) + sq(&self.embed.projection)
    }
}

/// Gradients matching [`ModelParams`].
#[derive(Debug, Clone)]
pub struct ParamGrads {
    pub w1: Array2<f64>,
    pub w2: Array2<f64>,
    pub wa: Array2<f64>,
    pub w_raw: f64,
    pub projection: Array2<f64>,
    pub bias: Array1<f64>,
}

/// Adam accumulators; one first/second moment pair per parameter tensor.
#[derive(Debug, Clone)]
pub struct OptimState {
    pub step: u64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps_adam: f64,
    moments: Vec<(Vec<f64>, Vec<f64>)>,
}

impl OptimState {
    pub fn new(params: &ModelParams) -> Self {
        let sizes = [
            params.agnn.w1.len(),
            params.agnn.w2.len(),
            params.agnn.wa.len(),
            1,
            params.embed.projection.len(),
            params.embed.bias.len(),
        ];
        Self {
            step: 0,
            beta1: 0.9,
            beta2: 0.999,
            eps_adam: 1e-8,
            moments: sizes.iter().map(|&s| (vec![0.0; s], vec![0.0; s])).collect(),
        }
    }
}

/// One bias-corrected Adam update on a flat tensor.
pub fn adam_update(
    values: &mut [f64],
    grads: &[f64],
    m: &mut [f64],
    v: &mut [f64],
    step: u64,
    beta1: f64,
    beta2: f64,
    eps: f64,
    lr: f64,
) {
    debug_assert_eq!(values.len(), grads.len());
    let bc1 = 1.0 - beta1.powi(step as i32);
    let bc2 = 1.0 - beta2.powi(step as i32);
    for i in 0..values.len() {
        m[i] = beta1 * m[i] + (1.0 - beta1) * grads[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * grads[i] * grads[i];
        let m_hat = m[i] / bc1;
        let v_hat = v[i] / bc2;
        values[i] -= lr * m_hat / (v_hat.sqrt() + eps);
    }
}

/// Applies one Adam step across all model tensors.
pub fn adam_step(
    params: &mut ModelParams,
    grads: &ParamGrads,
    state: &mut OptimState,
    lr: f64,
) -> Result<(), TrainError> {
    if grads.w1.dim() != params.agnn.w1.dim()
        || grads.w2.dim() != params.agnn.w2.dim()
        || grads.wa.dim() != params.agnn.wa.dim()
    {
        return Err(TrainError::ShapeMismatch("agnn weights"));
    }
    if grads.projection.dim() != params.embed.projection.dim()
        || grads.bias.len() != params.embed.bias.len()
    {
        return Err(TrainError::ShapeMismatch("embedding"));
    }
    state.step += 1;
    let (b1, b2, eps, t) = (state.beta1, state.beta2, state.eps_adam, state.step);
    let mut scalar = [params.agnn.w_raw];
    let tensors: [(&mut [f64], &[f64]); 6] = [
        (params.agnn.w1.as_slice_mut().unwrap(), grads.w1.as_slice().unwrap()),
        (params.agnn.w2.as_slice_mut().unwrap(), grads.w2.as_slice().unwrap()),
        (params.agnn.wa.as_slice_mut().unwrap(), grads.wa.as_slice().unwrap()),
        (&mut scalar, std::slice::from_ref(&grads.w_raw)),
        (params.embed.projection.as_slice_mut().unwrap(), grads.projection.as_slice().unwrap()),
        (params.embed.bias.as_slice_mut().unwrap(), grads.bias.as_slice().unwrap()),
    ];
    for (idx, (values, g)) in tensors.into_iter().enumerate() {
        let (m, v) = &mut state.moments[idx];
        adam_update(values, g, m, v, t, b1, b2, eps, lr);
    }
    params.agnn.w_raw = scalar[0];
    Ok(())
}

/// One training sample: a current-frame feature map, detection boxes,
/// flow-predicted tracklet boxes, and the ground-truth assignment.
#[derive(Debug, Clone)]
pub struct FramePairSample {
    pub map: FeatureMap,
    pub det_boxes: Vec<BBox>,
    pub trk_boxes: Vec<BBox>,
    pub labels: LabelMatrix,
}

/// Forward + loss for one sample; also returns parameter gradients.
fn sample_loss_and_grads(
    sample: &FramePairSample,
    params: &ModelParams,
    wts: &LossWeights,
) -> Result<(f64, ParamGrads), TrainError> {
    let regions_d = roifeat::pooled_regions(&sample.map, &sample.det_boxes, params.embed.pool);
    let regions_t = roifeat::pooled_regions(&sample.map, &sample.trk_boxes, params.embed.pool);
    let fd = roifeat::extract_features(&sample.map, &sample.det_boxes, &params.embed)?;
    let ft = roifeat::extract_features(&sample.map, &sample.trk_boxes, &params.embed)?;

    let (m, n) = (sample.det_boxes.len(), sample.trk_boxes.len());
    let mut iou = Array2::zeros((m, n));
    for i in 0..m {
        for j in 0..n {
            iou[(i, j)] = crate::types::iou(&sample.det_boxes[i], &sample.trk_boxes[j]);
        }
    }

    let (s_out, cache) = agnn::forward(&fd, &ft, &iou, &params.agnn)?;
    let masks = loss::build_masks(&sample.labels);
    let (loss_val, d_s) = loss::bmse(&s_out, &sample.labels, &masks, wts, params.reg_norm_sq())?;
    let g = agnn::backward(&cache, &params.agnn, &d_s)?;

    let (proj_d, bias_d) = roifeat::embed_backward(&regions_d, &g.fd, &params.embed);
    let (proj_t, bias_t) = roifeat::embed_backward(&regions_t, &g.ft, &params.embed);

    let two_eps = 2.0 * wts.epsilon;
    let grads = ParamGrads {
        w1: g.w1 + two_eps * &params.agnn.w1,
        w2: g.w2 + two_eps * &params.agnn.w2,
        wa: g.wa + two_eps * &params.agnn.wa,
        w_raw: g.w_raw,
        projection: proj_d + proj_t + two_eps * &params.embed.projection,
        bias: bias_d + bias_t,
    };
    Ok((loss_val, grads))
}

/// Runs one epoch: per sample forward, backward, Adam step. Returns the
/// mean loss over the batch (evaluated before each update).
pub fn train_epoch(
    pairs: &[FramePairSample],
    params: &mut ModelParams,
    state: &mut OptimState,
    wts: &LossWeights,
    lr: f64,
) -> Result<f64, TrainError> {
    if pairs.is_empty() {
        return Err(TrainError::EmptyBatch);
    }
    let mut total = 0.0;
    for sample in pairs {
        let (loss_val, grads) = sample_loss_and_grads(sample, params, wts)?;
        total += loss_val;
        adam_step(params, &grads, state, lr)?;
    }
    Ok(total / pairs.len() as f64)
}

/// Evaluation-only mean loss (no parameter updates).
pub fn eval_loss(
    pairs: &[FramePairSample],
    params: &ModelParams,
    wts: &LossWeights,
) -> Result<f64, TrainError> {
    if pairs.is_empty() {
        return Err(TrainError::EmptyBatch);
    }
    let mut total = 0.0;
    for sample in pairs {
        total += sample_loss_and_grads(sample, params, wts)?.0;
    }
    Ok(total / pairs.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn schedule_endpoints() {
        let s = LrSchedule::default();
        assert_eq!(lr_at(0, &s).unwrap(), 0.05);
        assert_eq!(lr_at(3000, &s).unwrap(), 2.5e-7);
    }

    #[test]
    fn schedule_midpoint() {
        let s = LrSchedule::default();
        assert_abs_diff_eq!(lr_at(1500, &s).unwrap(), 0.025000125, epsilon = 1e-12);
    }

    #[test]
    fn schedule_piecewise_constant_and_monotone() {
        let s = LrSchedule::default();
        let mut prev = f64::INFINITY;
        for epoch in 0..=3000 {
            let lr = lr_at(epoch, &s).unwrap();
            assert!((s.lr_min..=s.lr_max).contains(&lr));
            assert!(lr <= prev + 1e-18, "lr increased at epoch {epoch}");
            if epoch % 30 != 0 {
                assert_eq!(lr, lr_at(epoch - epoch % 30, &s).unwrap());
            }
            prev = lr;
        }
    }

    #[test]
    fn schedule_out_of_range() {
        assert!(matches!(
            lr_at(3001, &LrSchedule::default()),
            Err(TrainError::EpochOutOfRange { .. })
        ));
    }

    #[test]
    fn adam_first_step_magnitude() {
        let mut p = [1.0];
        let mut m = [0.0];
        let mut v = [0.0];
        adam_update(&mut p, &[1.0], &mut m, &mut v, 1, 0.9, 0.999, 1e-8, 0.1);
        // Bias correction makes the first step lr * 1 / (1 + eps).
        assert_abs_diff_eq!(1.0 - p[0], 0.1 / (1.0 + 1e-8), epsilon = 1e-12);
    }

    #[test]
    fn adam_zero_gradient_keeps_params() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut params = ModelParams::init(1, 2, 4, &mut rng);
        let snapshot = params.clone();
        let mut state = OptimState::new(&params);
        let grads = ParamGrads {
            w1: Array2::zeros((4, 4)),
            w2: Array2::zeros((4, 4)),
            wa: Array2::zeros((4, 4)),
            w_raw: 0.0,
            projection: Array2::zeros(params.embed.projection.raw_dim()),
            bias: Array1::zeros(4),
        };
        adam_step(&mut params, &grads, &mut state, 0.1).unwrap();
        assert_eq!(state.step, 1);
        assert_eq!(params.agnn.w1, snapshot.agnn.w1);
        assert_eq!(params.embed.projection, snapshot.embed.projection);
        assert_eq!(params.agnn.w_raw, snapshot.agnn.w_raw);
    }

    #[test]
    fn adam_constant_gradient_monotone_decrease() {
        let mut p = [0.5];
        let mut m = [0.0];
        let mut v = [0.0];
        let mut prev = p[0];
        for t in 1..=50 {
            adam_update(&mut p, &[1.0], &mut m, &mut v, t, 0.9, 0.999, 1e-8, 0.01);
            assert!(p[0] < prev);
            prev = p[0];
        }
    }

    #[test]
    fn adam_shape_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut params = ModelParams::init(1, 2, 4, &mut rng);
        let mut state = OptimState::new(&params);
        let grads = ParamGrads {
            w1: Array2::zeros((3, 3)),
            w2: Array2::zeros((4, 4)),
            wa: Array2::zeros((4, 4)),
            w_raw: 0.0,
            projection: Array2::zeros(params.embed.projection.raw_dim()),
            bias: Array1::zeros(4),
        };
        assert!(adam_step(&mut params, &grads, &mut state, 0.1).is_err());
    }

    #[test]
    fn empty_batch_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut params = ModelParams::init(1, 2, 4, &mut rng);
        let mut state = OptimState::new(&params);
        assert!(matches!(
            train_epoch(&[], &mut params, &mut state, &LossWeights::default(), 0.1),
            Err(TrainError::EmptyBatch)
        ));
    }

    fn toy_sample(rng: &mut ChaCha8Rng) -> FramePairSample {
        // Two well-separated textured objects on a 40x40 map.
        let mut data = vec![0.0; 40 * 40];
        for y in 0..40 {
            for x in 0..40 {
                data[y * 40 + x] = rng.gen_range(0.0..0.05);
            }
        }
        for y in 5..15 {
            for x in 5..15 {
                data[y * 40 + x] = 0.9 + 0.1 * (((x * 7 + y * 3) % 5) as f64 / 5.0);
            }
        }
        for y in 25..35 {
            for x in 25..35 {
                data[y * 40 + x] = 0.3 + 0.1 * (((x * 5 + y * 11) % 7) as f64 / 7.0);
            }
        }
        let map = FeatureMap::new(1, 40, 40, 1.0, data).unwrap();
        let b1 = BBox::new(5.0, 5.0, 10.0, 10.0).unwrap();
        let b2 = BBox::new(25.0, 25.0, 10.0, 10.0).unwrap();
        let labels = LabelMatrix::new(ndarray::array![[1.0, 0.0], [0.0, 1.0]]).unwrap();
        FramePairSample {
            map,
            det_boxes: vec![b1, b2],
            trk_boxes: vec![
                BBox::new(4.0, 6.0, 10.0, 10.0).unwrap(),
                BBox::new(26.0, 24.0, 10.0, 10.0).unwrap(),
            ],
            labels,
        }
    }

    #[test]
    fn zero_lr_is_pure_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let sample = toy_sample(&mut rng);
        let mut params = ModelParams::init(1, 7, 8, &mut rng);
        let snapshot = params.clone();
        let mut state = OptimState::new(&params);
        train_epoch(&[sample], &mut params, &mut state, &LossWeights::default(), 0.0).unwrap();
        assert_eq!(params.agnn.w1, snapshot.agnn.w1);
        assert_eq!(params.agnn.w2, snapshot.agnn.w2);
        assert_eq!(params.agnn.wa, snapshot.agnn.wa);
        assert_eq!(params.agnn.w_raw, snapshot.agnn.w_raw);
        assert_eq!(params.embed.projection, snapshot.embed.projection);
        assert_eq!(params.embed.bias, snapshot.embed.bias);
    }

    #[test]
    fn loss_decreases_on_separable_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sample = toy_sample(&mut rng);
        let mut params = ModelParams::init(1, 7, 8, &mut rng);
        let mut state = OptimState::new(&params);
        let wts = LossWeights::default();
        let initial = eval_loss(std::slice::from_ref(&sample), &params, &wts).unwrap();
        let mut last = initial;
        for _ in 0..50 {
            last = train_epoch(
                std::slice::from_ref(&sample),
                &mut params,
                &mut state,
                &wts,
                1e-3,
            )
            .unwrap();
        }
        assert!(
            last < initial * 0.5,
            "loss did not drop: initial {initial}, final {last}"
        );
    }
}
