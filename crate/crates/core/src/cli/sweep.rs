use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measures::{evaluate_point_with, QuantityReport};
use crate::protocol::{Message, ProtocolPoint};
use crate::rindler::{check_range, BellIndex, ModeSplit, R_MAX};

pub const DEFAULT_SURFACE_GRID: usize = 61;
pub const DEFAULT_CUT_GRID: usize = 101;
pub const DEFAULT_SWEEP_GRID: usize = 21;

/// Evenly spaced samples `start..=stop`, plus any pinned extra points.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    extra: Vec<f64>,
}

impl AxisSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Self {
        Self {
            start,
            stop,
            count,
            extra: Vec::new(),
        }
    }

    pub fn single(value: f64) -> Self {
        Self::new(value, value, 1)
    }

    /// Adds a sample that the uniform grid would miss.
    pub fn with_point(mut self, x: f64) -> Self {
        self.extra.push(x);
        self
    }

    pub fn validate(&self, name: &'static str, min: f64, max: f64) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Dimension(format!("{name}: count must be at least 1")));
        }
        if self.start.partial_cmp(&self.stop).is_none_or(|o| o.is_gt()) {
            return Err(Error::Dimension(format!(
                "{name}: start {} is after stop {}",
                self.start, self.stop
            )));
        }
        for &x in [self.start, self.stop].iter().chain(&self.extra) {
            check_range(name, x, min, max)?;
        }
        Ok(())
    }

    /// Sorted samples; the last uniform sample is exactly `stop`.
    pub fn values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = if self.count == 1 {
            vec![self.start]
        } else {
            let step = (self.stop - self.start) / (self.count - 1) as f64;
            (0..self.count)
                .map(|k| {
                    if k + 1 == self.count {
                        self.stop
                    } else {
                        self.start + k as f64 * step
                    }
                })
                .collect()
        };
        v.extend_from_slice(&self.extra);
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }
}

impl FromStr for AxisSpec {
    type Err = String;

    /// `VALUE` or `START:STOP:COUNT`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("{t:?} is not a number"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(Self::single(num(v)?)),
            [a, b, n] => {
                let count = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("{n:?} is not a point count"))?;
                Ok(Self::new(num(a)?, num(b)?, count))
            }
            _ => Err(format!("expected VALUE or START:STOP:COUNT, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub r_spec: AxisSpec,
    pub ql_spec: AxisSpec,
    pub msg: Message,
    pub idx: BellIndex,
    pub include_discord: bool,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(r_spec: AxisSpec, ql_spec: AxisSpec) -> Self {
        Self {
            r_spec,
            ql_spec,
            msg: Message::default(),
            idx: BellIndex::default(),
            include_discord: true,
            output_format: OutputFormat::Csv,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.r_spec.validate("r", 0.0, R_MAX)?;
        self.ql_spec.validate("q_l", 0.0, 1.0)
    }

    /// Grid points in output order: r-major, then q_l.
    pub fn points(&self) -> Result<Vec<ProtocolPoint>> {
        self.validate()?;
        let qls = self.ql_spec.values();
        let mut out = Vec::new();
        for r in self.r_spec.values() {
            for &q in &qls {
                out.push(ProtocolPoint::new(ModeSplit::new(r, q)?, self.idx, self.msg));
            }
        }
        Ok(out)
    }
}

/// Evaluates every grid point on the rayon pool; rows come back in grid order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<QuantityReport>> {
    let points = cfg.points()?;
    points
        .par_iter()
        .map(|pt| evaluate_point_with(pt, cfg.include_discord))
        .collect()
}

/// Named figure presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    /// Single-mode approximation (q_l = 0) against r.
    Fig2,
    /// Success-probability surface over (r, q_l).
    Fig4,
    /// Capacity surface over (r, q_l).
    Fig5,
    /// Negativity surface over (r, q_l).
    Fig6,
    /// Discord surface over (r, q_l).
    Fig7,
    /// q_l = 1/√2 against r.
    #[value(name = "fig8-thin")]
    Fig8Thin,
    /// q_l = 1 against r.
    #[value(name = "fig8-thick")]
    Fig8Thick,
    /// r = 0 against q_l.
    #[value(name = "fig3-thin")]
    Fig3Thin,
    /// r = π/4 against q_l.
    #[value(name = "fig3-thick")]
    Fig3Thick,
}

impl Figure {
    /// `grid` overrides the samples per swept axis.
    pub fn config(self, grid: Option<usize>) -> SweepConfig {
        let surface = grid.unwrap_or(DEFAULT_SURFACE_GRID);
        let cut = grid.unwrap_or(DEFAULT_CUT_GRID);
        let full_r = |n| AxisSpec::new(0.0, FRAC_PI_4, n);
        let full_ql = |n| AxisSpec::new(0.0, 1.0, n);
        let (r_spec, ql_spec) = match self {
            Figure::Fig2 => (full_r(cut), AxisSpec::single(0.0)),
            Figure::Fig4 | Figure::Fig5 | Figure::Fig6 | Figure::Fig7 => {
                (full_r(surface), full_ql(surface))
            }
            Figure::Fig8Thin => (full_r(cut), AxisSpec::single(FRAC_1_SQRT_2)),
            Figure::Fig8Thick => (full_r(cut), AxisSpec::single(1.0)),
            Figure::Fig3Thin => (AxisSpec::single(0.0), full_ql(cut).with_point(FRAC_1_SQRT_2)),
            Figure::Fig3Thick => (
                AxisSpec::single(FRAC_PI_4),
                full_ql(cut).with_point(FRAC_1_SQRT_2),
            ),
        };
        SweepConfig::new(r_spec, ql_spec)
    }
}
