use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use tpagt::flow::GrayFrame;
use tpagt::io::{self, Config};
use tpagt::roifeat::FeatureMap;
use tpagt::train::{self, LrSchedule, ModelParams, OptimState};
use tpagt::types::Detection;
use tpagt::{moteval, synth, tracker};

#[derive(Parser)]
#[command(name = "tpagt", about = "Graph-based multi-object tracking association", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Track a sequence: detections + frames in, MOT result file out.
    Track {
        /// MOT CSV detection file.
        #[arg(long)]
        dets: PathBuf,
        /// Directory of PGM frames, sorted by name.
        #[arg(long)]
        frames: PathBuf,
        /// Directory of FTEN feature maps; frames are used when omitted.
        #[arg(long)]
        map_dir: Option<PathBuf>,
        /// Model checkpoint; randomly initialized when omitted.
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Optional WxH resize applied to frames before tracking.
        #[arg(long)]
        resize: Option<String>,
    },
    /// Train on synthetic scenarios (a spec file or directory of them).
    Train {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out_params: PathBuf,
        #[arg(long, default_value_t = 300)]
        epochs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Peak learning rate of the cosine schedule.
        #[arg(long, default_value_t = 1e-3)]
        lr_max: f64,
    },
    /// Evaluate a result file against ground truth; prints
    /// "MOTA,IDF1,MT,ML,FP,FN,IDSW".
    Eval {
        #[arg(long)]
        gt: PathBuf,
        #[arg(long)]
        result: PathBuf,
    },
    /// Generate a synthetic scenario: PGM frames, FTEN maps, gt and det
    /// files.
    Synth {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sparse optical flow between two PGM frames; prints "dx,dy" per
    /// point.
    Flow {
        #[arg(long)]
        prev: PathBuf,
        #[arg(long)]
        curr: PathBuf,
        /// Points as "x,y" pairs separated by semicolons.
        #[arg(long)]
        points: String,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn load_cfg(path: &Option<PathBuf>) -> Result<Config, Box<dyn std::error::Error>> {
    Ok(match path {
        Some(p) => io::load_config(p)?,
        None => Config::default(),
    })
}

fn sorted_files(dir: &Path, ext: &str) -> Result<Vec<PathBuf>, std::io::Error> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|e| e == ext).unwrap_or(false))
        .collect();
    files.sort();
    Ok(files)
}

fn resize_frame(frame: &GrayFrame, w: u32, h: u32) -> GrayFrame {
    let sx = frame.width as f64 / w as f64;
    let sy = frame.height as f64 / h as f64;
    let data = (0..w as usize * h as usize)
        .map(|i| {
            let x = (i % w as usize) as f64;
            let y = (i / w as usize) as f64;
            frame.sample((x + 0.5) * sx - 0.5, (y + 0.5) * sy - 0.5)
        })
        .collect();
    GrayFrame::new(w, h, data).expect("sized by construction")
}

fn run(command: Command) -> Result<(), Box<dyn std::error::Error>> {
    match command {
        Command::Track { dets, frames, map_dir, params, config, out, resize } => {
            let cfg = load_cfg(&config)?;
            let det_map = io::parse_det(&dets)?;
            let mut frame_imgs: Vec<GrayFrame> = sorted_files(&frames, "pgm")?
                .iter()
                .map(|p| io::read_pgm(p))
                .collect::<Result<_, _>>()?;
            if let Some(spec) = resize {
                let (w, h) = spec
                    .split_once('x')
                    .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                    .ok_or("--resize expects WxH")?;
                frame_imgs = frame_imgs.iter().map(|f| resize_frame(f, w, h)).collect();
            }
            let maps: Vec<FeatureMap> = match map_dir {
                Some(dir) => sorted_files(&dir, "ften")?
                    .iter()
                    .map(|p| io::read_ften(p))
                    .collect::<Result<_, _>>()?,
                None => frame_imgs.iter().map(FeatureMap::from_gray).collect(),
            };
            let model = match params {
                Some(p) => io::read_checkpoint(&p)?,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(0);
                    ModelParams::init(maps.first().map(|m| m.channels).unwrap_or(1), 7,
                        cfg.tracker.feature_dim, &mut rng)
                }
            };
            let per_frame: Vec<Vec<Detection>> = (1..=frame_imgs.len() as u64)
                .map(|f| det_map.get(&f).cloned().unwrap_or_default())
                .collect();
            let rows =
                tracker::run_sequence(&frame_imgs, &maps, &per_frame, &model, &cfg.tracker)?;
            io::write_result(&io::track_rows_to_mot(&rows), &out)?;
            Ok(())
        }
        Command::Train { data, config, out_params, epochs, seed, lr_max } => {
            let cfg = load_cfg(&config)?;
            let spec_files = if data.is_dir() {
                sorted_files(&data, "txt")?
            } else {
                vec![data]
            };
            if spec_files.is_empty() {
                return Err("no scenario spec files found".into());
            }
            let mut pairs = Vec::new();
            for (idx, spec_path) in spec_files.iter().enumerate() {
                let scenario = io::parse_scenario(&std::fs::read_to_string(spec_path)?)?;
                let generated = synth::gen_scenario(&scenario, seed.wrapping_add(idx as u64))?;
                pairs.extend(synth::training_pairs(&generated, &scenario));
            }
            if pairs.is_empty() {
                return Err("scenarios produced no training pairs".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let channels = pairs[0].map.channels;
            let mut model = ModelParams::init(channels, 7, cfg.tracker.feature_dim, &mut rng);
            let mut state = OptimState::new(&model);
            let sched = LrSchedule {
                lr_max,
                lr_min: lr_max * 5e-6,
                period_epochs: 30,
                total_epochs: epochs,
            };
            for epoch in 0..epochs {
                let lr = train::lr_at(epoch, &sched)?;
                let mean = train::train_epoch(&pairs, &mut model, &mut state, &cfg.loss, lr)?;
                println!("{epoch},{lr},{mean}");
                if cfg.checkpoint_every > 0 && (epoch + 1) % cfg.checkpoint_every == 0 {
                    io::write_checkpoint(&model, &out_params)?;
                }
            }
            io::write_checkpoint(&model, &out_params)?;
            Ok(())
        }
        Command::Eval { gt, result } => {
            let gt_rows = io::rows_to_tracks(&io::parse_mot_rows(&gt)?);
            let pred_rows = io::rows_to_tracks(&io::parse_mot_rows(&result)?);
            let m = moteval::evaluate(&gt_rows, &pred_rows, 0.5)?;
            println!(
                "{:.6},{:.6},{:.6},{:.6},{},{},{}",
                m.mota, m.idf1, m.mt, m.ml, m.fp, m.fn_, m.idsw
            );
            Ok(())
        }
        Command::Synth { spec, out_dir, seed } => {
            let scenario = io::parse_scenario(&std::fs::read_to_string(&spec)?)?;
            let data = synth::gen_scenario(&scenario, seed)?;
            std::fs::create_dir_all(&out_dir)?;
            for (idx, frame) in data.frames.iter().enumerate() {
                io::write_pgm(frame, &out_dir.join(format!("frame_{:06}.pgm", idx + 1)))?;
            }
            for (idx, map) in data.maps.iter().enumerate() {
                io::write_ften(map, &out_dir.join(format!("map_{:06}.ften", idx + 1)))?;
            }
            let gt_rows: Vec<io::MotRow> = data
                .gt
                .iter()
                .map(|e| io::MotRow {
                    frame: e.frame,
                    id: e.id as i64,
                    left: e.bbox.left,
                    top: e.bbox.top,
                    width: e.bbox.width,
                    height: e.bbox.height,
                    conf: if e.visible { 1.0 } else { 0.0 },
                    x: -1.0,
                    y: -1.0,
                    z: -1.0,
                })
                .collect();
            io::write_result(&gt_rows, &out_dir.join("gt.txt"))?;
            let det_rows: Vec<io::MotRow> = data
                .dets
                .iter()
                .map(|d| io::MotRow {
                    frame: d.frame,
                    id: -1,
                    left: d.bbox.left,
                    top: d.bbox.top,
                    width: d.bbox.width,
                    height: d.bbox.height,
                    conf: d.confidence,
                    x: -1.0,
                    y: -1.0,
                    z: -1.0,
                })
                .collect();
            io::write_result(&det_rows, &out_dir.join("det.txt"))?;
            Ok(())
        }
        Command::Flow { prev, curr, points, config } => {
            let cfg = load_cfg(&config)?;
            let prev_frame = io::read_pgm(&prev)?;
            let curr_frame = io::read_pgm(&curr)?;
            for chunk in points.split(';') {
                let (x, y) = chunk
                    .split_once(',')
                    .and_then(|(a, b)| {
                        Some((a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?))
                    })
                    .ok_or_else(|| format!("bad point '{chunk}'"))?;
                let r = tpagt::flow::track_point(
                    &prev_frame,
                    &curr_frame,
                    (x, y),
                    &cfg.tracker.flow,
                )?;
                println!("{},{}", r.dx, r.dy);
            }
            Ok(())
        }
    }
}
