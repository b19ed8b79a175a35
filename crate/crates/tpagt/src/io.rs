//! File formats and configuration: MOT Challenge CSV, binary PGM frames,
//! FTEN feature-map tensors, model checkpoints, the plain-text config
//! file, and scenario descriptions for the generator.

use crate::agnn::AgnnParams;
use crate::flow::GrayFrame;
use crate::loss::LossWeights;
use crate::roifeat::{EmbedParams, FeatureMap};
use crate::synth::{ObjectSpec, SynthScenario};
use crate::tracker::{TrackRow, TrackerConfig};
use crate::train::ModelParams;
use crate::types::{BBox, Detection};
use ndarray::{Array1, Array2};
use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("line {line}: non-positive box ({width} x {height})")]
    NonPositiveBox { line: usize, width: f64, height: f64 },
    #[error("bad file format: {0}")]
    BadFormat(String),
}

/// One MOT Challenge CSV row:
/// `frame,id,left,top,width,height,conf,x,y,z`.
#[derive(Debug, Clone, PartialEq)]
pub struct MotRow {
    pub frame: u64,
    pub id: i64,
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
    pub conf: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

fn parse_mot_line(line: &str, lineno: usize) -> Result<MotRow, IoError> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    if fields.len() < 7 {
        return Err(IoError::ParseError {
            line: lineno,
            msg: format!("expected at least 7 fields, got {}", fields.len()),
        });
    }
    let num = |idx: usize| -> Result<f64, IoError> {
        fields[idx].parse::<f64>().map_err(|e| IoError::ParseError {
            line: lineno,
            msg: format!("field {}: {e}", idx + 1),
        })
    };
    let frame = fields[0].parse::<u64>().map_err(|e| IoError::ParseError {
        line: lineno,
        msg: format!("frame: {e}"),
    })?;
    let id = fields[1].parse::<i64>().map_err(|e| IoError::ParseError {
        line: lineno,
        msg: format!("id: {e}"),
    })?;
    let (left, top, width, height, conf) = (num(2)?, num(3)?, num(4)?, num(5)?, num(6)?);
    if width <= 0.0 || height <= 0.0 {
        return Err(IoError::NonPositiveBox { line: lineno, width, height });
    }
    let opt = |idx: usize| -> f64 {
        fields.get(idx).and_then(|f| f.parse().ok()).unwrap_or(-1.0)
    };
    Ok(MotRow { frame, id, left, top, width, height, conf, x: opt(7), y: opt(8), z: opt(9) })
}

/// Parses all rows of a MOT CSV file.
pub fn parse_mot_rows(path: &Path) -> Result<Vec<MotRow>, IoError> {
    let text = std::fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        rows.push(parse_mot_line(line, idx + 1)?);
    }
    Ok(rows)
}

/// Parses a detection file, grouping rows by frame. The id field is
/// ignored; confidences are clamped into [0, 1].
pub fn parse_det(path: &Path) -> Result<BTreeMap<u64, Vec<Detection>>, IoError> {
    let mut out: BTreeMap<u64, Vec<Detection>> = BTreeMap::new();
    for row in parse_mot_rows(path)? {
        let bbox = BBox::new(row.left, row.top, row.width, row.height)
            .expect("positivity checked at parse");
        let det = Detection::new(bbox, row.conf.clamp(0.0, 1.0), row.frame)
            .expect("confidence clamped");
        out.entry(row.frame).or_default().push(det);
    }
    Ok(out)
}

/// Converts track-file rows (id >= 0, conf > 0) for evaluation.
pub fn rows_to_tracks(rows: &[MotRow]) -> Vec<TrackRow> {
    rows.iter()
        .filter(|r| r.id >= 0 && r.conf > 0.0)
        .map(|r| TrackRow {
            frame: r.frame,
            id: r.id as u64,
            bbox: BBox::new(r.left, r.top, r.width, r.height).expect("validated at parse"),
            confidence: r.conf,
        })
        .collect()
}

fn format_mot_row(r: &MotRow) -> String {
    format!(
        "{},{},{},{},{},{},{:.6},-1,-1,-1",
        r.frame, r.id, r.left, r.top, r.width, r.height, r.conf
    )
}

/// Writes rows in MOT CSV form; write-to-temp then atomic rename, so a
/// failed write never leaves a partial file.
pub fn write_result(rows: &[MotRow], path: &Path) -> Result<(), IoError> {
    let mut text = String::new();
    for r in rows {
        text.push_str(&format_mot_row(r));
        text.push('\n');
    }
    atomic_write(path, text.as_bytes())
}

pub fn track_rows_to_mot(rows: &[TrackRow]) -> Vec<MotRow> {
    rows.iter()
        .map(|r| MotRow {
            frame: r.frame,
            id: r.id as i64,
            left: r.bbox.left,
            top: r.bbox.top,
            width: r.bbox.width,
            height: r.bbox.height,
            conf: r.confidence,
            x: -1.0,
            y: -1.0,
            z: -1.0,
        })
        .collect()
}

fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), IoError> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
    ));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

// ---------------------------------------------------------------------
// PGM (P5, 8-bit)

/// Reads a binary PGM frame; intensities scaled to [0, 1] by /255.
pub fn read_pgm(path: &Path) -> Result<GrayFrame, IoError> {
    let bytes = std::fs::read(path)?;
    let mut pos = 0usize;
    let mut token = || -> Result<String, IoError> {
        // Skip whitespace and '#' comment lines.
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b'#' {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
                continue;
            }
            break;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(IoError::BadFormat("truncated PGM header".into()));
        }
        Ok(String::from_utf8_lossy(&bytes[start..pos]).into_owned())
    };
    if token()? != "P5" {
        return Err(IoError::BadFormat("not a P5 PGM".into()));
    }
    let width: u32 = token()?.parse().map_err(|_| IoError::BadFormat("bad width".into()))?;
    let height: u32 = token()?.parse().map_err(|_| IoError::BadFormat("bad height".into()))?;
    let maxval: u32 = token()?.parse().map_err(|_| IoError::BadFormat("bad maxval".into()))?;
    if maxval != 255 {
        return Err(IoError::BadFormat(format!("unsupported maxval {maxval}")));
    }
    pos += 1; // single whitespace after maxval
    let need = width as usize * height as usize;
    if bytes.len() < pos + need {
        return Err(IoError::BadFormat("truncated PGM data".into()));
    }
    let data = bytes[pos..pos + need].iter().map(|b| *b as f64 / 255.0).collect();
    GrayFrame::new(width, height, data).map_err(|e| IoError::BadFormat(e.to_string()))
}

pub fn write_pgm(frame: &GrayFrame, path: &Path) -> Result<(), IoError> {
    let mut bytes = format!("P5\n{} {}\n255\n", frame.width, frame.height).into_bytes();
    bytes.extend(frame.data.iter().map(|v| (v.clamp(0.0, 1.0) * 255.0).round() as u8));
    atomic_write(path, &bytes)
}

// ---------------------------------------------------------------------
// FTEN feature-map tensors

/// Writes a feature map: magic "FTEN", little-endian u32 rank, u32 dims
/// (C, H, W), f64 stride, then f32 data row-major.
pub fn write_ften(map: &FeatureMap, path: &Path) -> Result<(), IoError> {
    let mut bytes = Vec::with_capacity(24 + map.data.len() * 4);
    bytes.extend(b"FTEN");
    bytes.extend(3u32.to_le_bytes());
    for d in [map.channels as u32, map.height as u32, map.width as u32] {
        bytes.extend(d.to_le_bytes());
    }
    bytes.extend(map.stride.to_le_bytes());
    for v in &map.data {
        bytes.extend((*v as f32).to_le_bytes());
    }
    atomic_write(path, &bytes)
}

pub fn read_ften(path: &Path) -> Result<FeatureMap, IoError> {
    let bytes = std::fs::read(path)?;
    let mut cur = std::io::Cursor::new(&bytes);
    let mut magic = [0u8; 4];
    cur.read_exact(&mut magic)?;
    if &magic != b"FTEN" {
        return Err(IoError::BadFormat("missing FTEN magic".into()));
    }
    let mut u32_buf = [0u8; 4];
    let mut read_u32 = |cur: &mut std::io::Cursor<&Vec<u8>>| -> Result<u32, IoError> {
        cur.read_exact(&mut u32_buf)?;
        Ok(u32::from_le_bytes(u32_buf))
    };
    let rank = read_u32(&mut cur)?;
    if rank != 3 {
        return Err(IoError::BadFormat(format!("expected rank 3, got {rank}")));
    }
    let c = read_u32(&mut cur)? as usize;
    let h = read_u32(&mut cur)? as usize;
    let w = read_u32(&mut cur)? as usize;
    let mut f64_buf = [0u8; 8];
    cur.read_exact(&mut f64_buf)?;
    let stride = f64::from_le_bytes(f64_buf);
    let mut data = Vec::with_capacity(c * h * w);
    let mut f32_buf = [0u8; 4];
    for _ in 0..c * h * w {
        cur.read_exact(&mut f32_buf)?;
        data.push(f32::from_le_bytes(f32_buf) as f64);
    }
    FeatureMap::new(c, h, w, stride, data).map_err(|e| IoError::BadFormat(e.to_string()))
}

// ---------------------------------------------------------------------
// Model checkpoint

/// Checkpoint layout: magic "AGNN", u32 D, W1, W2, Wa row-major f64,
/// w_raw f64, then the embedding block with a u32 byte-length prefix
/// (u32 pool, u32 dim, u32 fanin, projection f64s, bias f64s).
pub fn write_checkpoint(params: &ModelParams, path: &Path) -> Result<(), IoError> {
    let d = params.agnn.dim();
    let mut bytes = Vec::new();
    bytes.extend(b"AGNN");
    bytes.extend((d as u32).to_le_bytes());
    for m in [&params.agnn.w1, &params.agnn.w2, &params.agnn.wa] {
        for v in m.iter() {
            bytes.extend(v.to_le_bytes());
        }
    }
    bytes.extend(params.agnn.w_raw.to_le_bytes());

    let e = &params.embed;
    let embed_len = 12 + 8 * (e.projection.len() + e.bias.len());
    bytes.extend((embed_len as u32).to_le_bytes());
    bytes.extend((e.pool as u32).to_le_bytes());
    bytes.extend((e.dim as u32).to_le_bytes());
    bytes.extend((e.fanin() as u32).to_le_bytes());
    for v in e.projection.iter() {
        bytes.extend(v.to_le_bytes());
    }
    for v in e.bias.iter() {
        bytes.extend(v.to_le_bytes());
    }
    atomic_write(path, &bytes)
}

pub fn read_checkpoint(path: &Path) -> Result<ModelParams, IoError> {
    let bytes = std::fs::read(path)?;
    let mut cur = std::io::Cursor::new(&bytes);
    let mut magic = [0u8; 4];
    cur.read_exact(&mut magic)?;
    if &magic != b"AGNN" {
        return Err(IoError::BadFormat("missing AGNN magic".into()));
    }
    let mut u32_buf = [0u8; 4];
    let mut f64_buf = [0u8; 8];
    macro_rules! ru32 {
        () => {{
            cur.read_exact(&mut u32_buf)?;
            u32::from_le_bytes(u32_buf) as usize
        }};
    }
    macro_rules! rf64 {
        () => {{
            cur.read_exact(&mut f64_buf)?;
            f64::from_le_bytes(f64_buf)
        }};
    }
    let d = ru32!();
    let mat = |cur: &mut std::io::Cursor<&Vec<u8>>| -> Result<Array2<f64>, IoError> {
        let mut m = Array2::zeros((d, d));
        for v in m.iter_mut() {
            let mut buf = [0u8; 8];
            cur.read_exact(&mut buf)?;
            *v = f64::from_le_bytes(buf);
        }
        Ok(m)
    };
    let w1 = mat(&mut cur)?;
    let w2 = mat(&mut cur)?;
    let wa = mat(&mut cur)?;
    let w_raw = rf64!();
    let declared = ru32!();
    let pool = ru32!();
    let dim = ru32!();
    let fanin = ru32!();
    if declared != 12 + 8 * (dim * fanin + dim) {
        return Err(IoError::BadFormat("embedding block length mismatch".into()));
    }
    let mut projection = Array2::zeros((dim, fanin));
    for v in projection.iter_mut() {
        *v = rf64!();
    }
    let mut bias = Array1::zeros(dim);
    for v in bias.iter_mut() {
        *v = rf64!();
    }
    Ok(ModelParams {
        agnn: AgnnParams { w1, w2, wa, w_raw },
        embed: EmbedParams { projection, bias, pool, dim },
    })
}

// ---------------------------------------------------------------------
// Config file

/// Runtime configuration assembled from `key = value` lines.
#[derive(Debug, Clone)]
pub struct Config {
    pub tracker: TrackerConfig,
    pub loss: LossWeights,
    pub checkpoint_every: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tracker: TrackerConfig::default(),
            loss: LossWeights::default(),
            checkpoint_every: 100,
        }
    }
}

/// Parses the config format: blank lines and `#` comments ignored,
/// unknown keys rejected.
pub fn parse_config(text: &str) -> Result<Config, IoError> {
    let mut cfg = Config::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| IoError::ParseError {
            line: lineno,
            msg: "expected key = value".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let bad = |msg: String| IoError::ParseError { line: lineno, msg };
        let fval =
            || value.parse::<f64>().map_err(|e| bad(format!("{key}: {e}")));
        let uval =
            || value.parse::<u64>().map_err(|e| bad(format!("{key}: {e}")));
        match key {
            "margin" => cfg.tracker.margin = fval()?,
            "k" => cfg.tracker.k = uval()? as u32,
            "alpha" => cfg.loss.alpha = fval()?,
            "beta" => cfg.loss.beta = fval()?,
            "gamma" => cfg.loss.gamma = fval()?,
            "delta" => cfg.loss.delta = fval()?,
            "epsilon" => cfg.loss.epsilon = fval()?,
            "window" => cfg.tracker.flow.window = uval()? as u32,
            "levels" => cfg.tracker.flow.levels = uval()? as usize,
            "min_conf" => cfg.tracker.min_conf = fval()?,
            "feature_dim" => cfg.tracker.feature_dim = uval()? as usize,
            "realign_features" => {
                cfg.tracker.realign_features = value.parse::<bool>().map_err(|e| {
                    IoError::ParseError { line: lineno, msg: format!("{key}: {e}") }
                })?
            }
            "use_flow" => {
                cfg.tracker.use_flow = value.parse::<bool>().map_err(|e| {
                    IoError::ParseError { line: lineno, msg: format!("{key}: {e}") }
                })?
            }
            "checkpoint_every" => cfg.checkpoint_every = uval()?,
            other => {
                return Err(IoError::ParseError {
                    line: lineno,
                    msg: format!("unknown key '{other}'"),
                })
            }
        }
    }
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<Config, IoError> {
    parse_config(&std::fs::read_to_string(path)?)
}

// ---------------------------------------------------------------------
// Scenario spec file

/// Parses a scenario description:
///
/// ```text
/// width = 320
/// height = 240
/// frames = 30
/// jitter = 1.0
/// drop = 0.02
/// # object = left,top,w,h,vx,vy,seed[,occl_start,occl_end]
/// object = 10,10,20,20,2,0,1
/// ```
pub fn parse_scenario(text: &str) -> Result<SynthScenario, IoError> {
    let mut width = 320u32;
    let mut height = 240u32;
    let mut frames = 30u64;
    let mut jitter = 1.0;
    let mut drop = 0.02;
    let mut shimmer = 0.0;
    let mut object_freq: Option<(f64, f64)> = None;
    let mut objects = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| IoError::ParseError {
            line: lineno,
            msg: "expected key = value".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let bad = |msg: String| IoError::ParseError { line: lineno, msg };
        match key {
            "width" => width = value.parse().map_err(|e| bad(format!("width: {e}")))?,
            "height" => height = value.parse().map_err(|e| bad(format!("height: {e}")))?,
            "frames" => frames = value.parse().map_err(|e| bad(format!("frames: {e}")))?,
            "jitter" => jitter = value.parse().map_err(|e| bad(format!("jitter: {e}")))?,
            "drop" => drop = value.parse().map_err(|e| bad(format!("drop: {e}")))?,
            "shimmer" => shimmer = value.parse().map_err(|e| bad(format!("shimmer: {e}")))?,
            "object_freq" => {
                let (lo, hi) = value
                    .split_once(',')
                    .ok_or_else(|| bad("object_freq needs 'lo,hi'".into()))?;
                object_freq = Some((
                    lo.trim().parse().map_err(|e| bad(format!("object_freq: {e}")))?,
                    hi.trim().parse().map_err(|e| bad(format!("object_freq: {e}")))?,
                ));
            }
            "object" => {
                let nums: Vec<f64> = value
                    .split(',')
                    .map(|f| f.trim().parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| bad(format!("object: {e}")))?;
                if nums.len() != 7 && nums.len() != 9 {
                    return Err(bad(format!("object needs 7 or 9 fields, got {}", nums.len())));
                }
                let start = BBox::new(nums[0], nums[1], nums[2], nums[3])
                    .map_err(|e| bad(format!("object: {e}")))?;
                objects.push(ObjectSpec {
                    start,
                    velocity: (nums[4], nums[5]),
                    texture_seed: nums[6] as u64,
                    occlusion: if nums.len() == 9 {
                        Some((nums[7] as u64, nums[8] as u64))
                    } else {
                        None
                    },
                });
            }
            other => {
                return Err(IoError::ParseError {
                    line: lineno,
                    msg: format!("unknown key '{other}'"),
                })
            }
        }
    }
    let mut s = SynthScenario::new(width, height, frames, objects);
    s.det_jitter_sigma = jitter;
    s.det_drop_rate = drop;
    s.shimmer = shimmer;
    if let Some(band) = object_freq {
        s.object_freq = band;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use tempfile::tempdir;

    #[test]
    fn parse_det_basic() {
        let dir = tempdir().unwrap();
        let p = dir.path().join("det.txt");
        std::fs::write(&p, "1,-1,10,20,30,40,0.9,-1,-1,-1\n").unwrap();
        let dets = parse_det(&p).unwrap();
        assert_eq!(dets.len(), 1);
        let d = &dets[&1][0];
        assert_eq!(d.bbox, BBox::new(10.0, 20.0, 30.0, 40.0).unwrap());
        assert_eq!(d.confidence, 0.9);
    }

    #[test]
    fn parse_det_empty_file() {
        let dir = tempdir().unwrap();
        let p = dir.path().join("det.txt");
        std::fs::write(&p, "").unwrap();
        assert!(parse_det(&p).unwrap().is_empty());
    }

    #[test]
    fn parse_det_rejects_zero_width() {
        let dir = tempdir().unwrap();
        let p = dir.path().join("det.txt");
        std::fs::write(&p, "1,-1,10,20,0,40,0.9,-1,-1,-1\n").unwrap();
        assert!(matches!(parse_det(&p), Err(IoError::NonPositiveBox { line: 1, .. })));
    }

    #[test]
    fn parse_error_carries_line_number() {
        let dir = tempdir().unwrap();
        let p = dir.path().join("det.txt");
        std::fs::write(&p, "1,-1,10,20,30,40,0.9\nnot,a,row\n").unwrap();
        match parse_det(&p) {
            Err(IoError::ParseError { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn write_then_parse_fixpoint() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let dir = tempdir().unwrap();
        let rows: Vec<MotRow> = (0..20)
            .map(|i| MotRow {
                frame: i / 4 + 1,
                id: i as i64 % 5,
                left: rng.gen_range(-10.0..100.0),
                top: rng.gen_range(-10.0..100.0),
                width: rng.gen_range(1.0..50.0),
                height: rng.gen_range(1.0..50.0),
                conf: rng.gen_range(0.0..1.0),
                x: -1.0,
                y: -1.0,
                z: -1.0,
            })
            .collect();
        let p1 = dir.path().join("a.txt");
        let p2 = dir.path().join("b.txt");
        write_result(&rows, &p1).unwrap();
        let parsed = parse_mot_rows(&p1).unwrap();
        write_result(&parsed, &p2).unwrap();
        let reparsed = parse_mot_rows(&p2).unwrap();
        assert_eq!(parsed, reparsed);
        // Byte-identical second cycle.
        assert_eq!(std::fs::read(&p1).unwrap().len(), std::fs::read(&p2).unwrap().len());
        assert_eq!(std::fs::read_to_string(&p1).unwrap(), {
            // conf was already 6-decimal after the first write
            std::fs::read_to_string(&p2).unwrap()
        });
    }

    #[test]
    fn write_result_single_and_empty() {
        let dir = tempdir().unwrap();
        let p = dir.path().join("r.txt");
        let row = MotRow {
            frame: 1,
            id: 3,
            left: 10.0,
            top: 20.0,
            width: 30.0,
            height: 40.0,
            conf: 1.0,
            x: -1.0,
            y: -1.0,
            z: -1.0,
        };
        write_result(std::slice::from_ref(&row), &p).unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "1,3,10,20,30,40,1.000000,-1,-1,-1\n");
        write_result(&[], &p).unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "");
    }

    #[test]
    fn pgm_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let frame = crate::synth::sinusoid_texture(33, 17, &mut rng);
        let dir = tempdir().unwrap();
        let p = dir.path().join("f.pgm");
        write_pgm(&frame, &p).unwrap();
        let back = read_pgm(&p).unwrap();
        assert_eq!((back.width, back.height), (33, 17));
        for (a, b) in frame.data.iter().zip(&back.data) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
    }

    #[test]
    fn pgm_rejects_other_magic() {
        let dir = tempdir().unwrap();
        let p = dir.path().join("f.pgm");
        std::fs::write(&p, b"P2\n2 2\n255\n0 0 0 0\n").unwrap();
        assert!(read_pgm(&p).is_err());
    }

    #[test]
    fn ften_round_trip_bit_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // f32-representable values survive the f64 <-> f32 crossing.
        let data: Vec<f64> =
            (0..2 * 4 * 5).map(|_| rng.gen_range(-1.0f32..1.0) as f64).collect();
        let map = FeatureMap::new(2, 4, 5, 8.0, data).unwrap();
        let dir = tempdir().unwrap();
        let p = dir.path().join("m.ften");
        write_ften(&map, &p).unwrap();
        let back = read_ften(&p).unwrap();
        assert_eq!((back.channels, back.height, back.width), (2, 4, 5));
        assert_eq!(back.stride, 8.0);
        assert_eq!(back.data, map.data);
        // Second write is byte-identical.
        let p2 = dir.path().join("m2.ften");
        write_ften(&back, &p2).unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(&p2).unwrap());
    }

    #[test]
    fn checkpoint_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let params = ModelParams::init(2, 5, 16, &mut rng);
        let dir = tempdir().unwrap();
        let p = dir.path().join("model.agnn");
        write_checkpoint(&params, &p).unwrap();
        let back = read_checkpoint(&p).unwrap();
        assert_eq!(back.agnn.w1, params.agnn.w1);
        assert_eq!(back.agnn.w2, params.agnn.w2);
        assert_eq!(back.agnn.wa, params.agnn.wa);
        assert_eq!(back.agnn.w_raw, params.agnn.w_raw);
        assert_eq!(back.embed.projection, params.embed.projection);
        assert_eq!(back.embed.bias, params.embed.bias);
        assert_eq!((back.embed.pool, back.embed.dim), (5, 16));
    }

    #[test]
    fn config_parse_and_defaults() {
        let cfg = parse_config("").unwrap();
        assert_eq!(cfg.tracker.k, 10);
        assert_eq!(cfg.tracker.margin, 0.2);
        assert_eq!(cfg.loss.alpha, 25.0);
        assert_eq!(cfg.checkpoint_every, 100);

        let cfg = parse_config(
            "# comment\nmargin = 0.3\nk = 5\nalpha = 10\nrealign_features = false\nwindow = 60\n",
        )
        .unwrap();
        assert_eq!(cfg.tracker.margin, 0.3);
        assert_eq!(cfg.tracker.k, 5);
        assert_eq!(cfg.loss.alpha, 10.0);
        assert!(!cfg.tracker.realign_features);
        assert_eq!(cfg.tracker.flow.window, 60);
    }

    #[test]
    fn config_unknown_key_rejected() {
        assert!(matches!(
            parse_config("margin = 0.2\nbogus = 1\n"),
            Err(IoError::ParseError { line: 2, .. })
        ));
    }

    #[test]
    fn scenario_parse() {
        let s = parse_scenario(
            "width = 200\nheight = 100\nframes = 10\njitter = 0.5\ndrop = 0\n\
             object = 10,10,20,20,2,0,1\nobject = 50,60,20,20,-1,1,2,5,7\n",
        )
        .unwrap();
        assert_eq!((s.width, s.height, s.frames), (200, 100, 10));
        assert_eq!(s.objects.len(), 2);
        assert_eq!(s.objects[1].occlusion, Some((5, 7)));
        assert_eq!(s.det_jitter_sigma, 0.5);
    }
}
