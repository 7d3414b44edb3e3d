use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

/// Exact projective geometry: cross-ratios, homographies, perspective drawings.
#[derive(Debug, Parser)]
#[command(name = "projgeo", version)]
pub struct Config {
    /// Scalar backend (default: exact, except `render` which uses float).
    #[arg(long, global = true, value_enum)]
    pub backend: Option<Backend>,

    /// Relative tolerance for float predicates.
    #[arg(long, global = true)]
    pub epsilon: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cross-ratio of four points: inline affine values, or a points file.
    CrossRatio {
        /// Points file with four records (two coordinates each, or three
        /// coordinates of collinear plane points).
        #[arg(long, conflicts_with = "values")]
        file: Option<PathBuf>,

        /// Four affine coordinates a b c d.
        #[arg(
            allow_negative_numbers = true,
            num_args = 4,
            required_unless_present = "file"
        )]
        values: Vec<String>,
    },

    /// Apply a homography of the plane to the points and lines of a file.
    Transform {
        /// Matrix file: three rows of three scalars.
        #[arg(long)]
        matrix: PathBuf,

        /// Points file.
        #[arg(long)]
        points: PathBuf,

        /// Apply the inverse of the matrix instead.
        #[arg(long)]
        inverse: bool,

        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Draw a wireframe scene in central projection as SVG.
    Render {
        /// Scene file (`v`, `e`, `d` records).
        scene: PathBuf,

        #[arg(long)]
        out: Option<PathBuf>,

        #[arg(long, default_value_t = 800.0)]
        width: f64,

        #[arg(long, default_value_t = 600.0)]
        height: f64,

        /// Pixels per unit of the image-plane chart.
        #[arg(long, default_value_t = 200.0)]
        scale: f64,

        /// Center of projection `x y z`.
        #[arg(long, default_value = "0 0 0", allow_hyphen_values = true)]
        center: String,

        /// Image plane `a b c d` for `a x + b y + c z = d`.
        #[arg(long, default_value = "0 0 1 1", allow_hyphen_values = true)]
        plane: String,

        /// Drop the parts of edges behind the center.
        #[arg(long)]
        front_only: bool,

        /// Also mark the vanishing point of every edge direction.
        #[arg(long)]
        mark_vanishing: bool,

        /// Parameter margin kept clear of the no-image plane.
        #[arg(long, default_value_t = 1e-6)]
        margin: f64,
    },

    /// Check cross-ratio preservation on random quadruples and homographies.
    DemoInvariance {
        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,

        /// Write an SVG of a quadruple, its perspective image and their
        /// cross-ratios.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
