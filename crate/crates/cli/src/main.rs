mod args;
mod commands;
mod demo;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use projgeo::formats::Viewport;
use projgeo::{Rational, RenderOptions, Tolerance};

use args::{Backend, Command, Config};
use commands::{emit, RenderRequest};
use error::{CliError, CliResult};

fn run(config: Config) -> CliResult<Option<String>> {
    let tol = config.epsilon.map(Tolerance::new).unwrap_or_default();
    let backend = config.backend;
    match config.command {
        Command::CrossRatio { file, values } => {
            let text = match backend.unwrap_or(Backend::Exact) {
                Backend::Exact => commands::cross_ratio::<Rational>(file.as_ref(), &values, tol)?,
                Backend::Float => commands::cross_ratio::<f64>(file.as_ref(), &values, tol)?,
            };
            Ok(Some(text))
        }
        Command::Transform {
            matrix,
            points,
            inverse,
            out,
        } => {
            let result = match backend.unwrap_or(Backend::Exact) {
                Backend::Exact => commands::transform::<Rational>(&matrix, &points, inverse, tol)?,
                Backend::Float => commands::transform::<f64>(&matrix, &points, inverse, tol)?,
            };
            // Status changes go to stderr so the output stays a valid points file.
            for note in &result.notes {
                eprintln!("{note}");
            }
            emit(out.as_ref(), result.text)
        }
        Command::Render {
            scene,
            out,
            width,
            height,
            scale,
            center,
            plane,
            front_only,
            mark_vanishing,
            margin,
        } => {
            if !(width > 0.0 && height > 0.0 && scale > 0.0) {
                return Err(CliError::Usage(
                    "--width, --height and --scale must be positive".into(),
                ));
            }
            let req = RenderRequest {
                scene: &scene,
                center: &center,
                plane: &plane,
                viewport: Viewport {
                    width,
                    height,
                    scale,
                },
                options: RenderOptions {
                    front_only,
                    near_margin: margin,
                    mark_edge_directions: mark_vanishing,
                },
            };
            let svg = match backend.unwrap_or(Backend::Float) {
                Backend::Exact => commands::render::<Rational>(&req, tol)?,
                Backend::Float => commands::render::<f64>(&req, tol)?,
            };
            emit(out.as_ref(), svg)
        }
        Command::DemoInvariance { seed, trials, out } => {
            let report = match backend.unwrap_or(Backend::Exact) {
                Backend::Exact => demo::run::<Rational>(seed, trials, tol, tol)?,
                Backend::Float => {
                    let compare = Tolerance::new(config.epsilon.unwrap_or(demo::FLOAT_COMPARE_EPS));
                    demo::run::<f64>(seed, trials, Tolerance::default(), compare)?
                }
            };
            let text = demo::finish(report)?;
            if let Some(path) = out.as_ref() {
                emit(Some(path), demo::figure_svg()?)?;
            }
            Ok(Some(text))
        }
    }
}

fn main() -> ExitCode {
    let config = Config::parse();
    match run(config) {
        Ok(text) => {
            if let Some(text) = text {
                let mut stdout = std::io::stdout().lock();
                if stdout
                    .write_all(text.as_bytes())
                    .and_then(|_| stdout.flush())
                    .is_err()
                {
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
