//! Job parameters from flags and an optional JSON config file. Flags win.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize, Serialize, clap::Args)]
#[serde(default, deny_unknown_fields)]
pub struct JobConfig {
    /// Base surface: F<n> or P2.
    #[arg(long)]
    pub base: Option<String>,
    /// Blow-up centers in order, e.g. `H` or `Z*F` (repeatable).
    #[arg(long = "blowup")]
    pub blowups: Vec<String>,
    /// Extra tracked curves `LABEL=CLASS` on the blown-up surface (repeatable).
    #[arg(long = "add")]
    pub add: Vec<String>,
    /// Boundary components joined by `+`, in chain order.
    #[arg(long)]
    pub chain: Option<String>,
    /// Positive class for the body (default `-K`).
    #[arg(long)]
    pub bundle: Option<String>,
    /// Right tail blow-ups.
    #[arg(long)]
    pub h: Option<usize>,
    /// Left tail blow-ups.
    #[arg(long)]
    pub v: Option<usize>,
    /// File with `LABEL = CLASS` lines on the final surface.
    #[arg(long)]
    pub curves: Option<PathBuf>,
    /// Upper bound on every angle (a rational, or `orthant`).
    #[arg(long = "box")]
    #[serde(rename = "box")]
    pub box_bound: Option<String>,
    /// Leave out catalog curves.
    #[arg(long)]
    pub no_catalog: bool,
    /// Leave out the self-intersection constraint.
    #[arg(long)]
    pub no_quadratic: bool,
    /// Only the orthant and the box: no curve constraints at all.
    #[arg(long)]
    pub bare: bool,
    /// The caller vouches that catalog plus `--curves` is complete.
    #[arg(long)]
    pub curves_complete: bool,
    /// Sweep: range of `n` for `F_n`, `a..b` inclusive.
    #[arg(long = "n")]
    pub n_range: Option<String>,
    /// Sweep: largest `h + v`.
    #[arg(long)]
    pub max_tails: Option<usize>,
    /// Directory to write json, csv and txt renderings into.
    #[arg(long)]
    #[serde(skip_serializing)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing)]
    pub format: Option<Format>,
    /// Worker threads for sweeps.
    #[arg(long)]
    #[serde(skip_serializing)]
    pub jobs: Option<usize>,
    /// Checks to run (repeatable or comma separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}

impl JobConfig {
    /// `self` with unset fields taken from `file`.
    pub fn over(self, file: JobConfig) -> JobConfig {
        fn pick<T>(a: Option<T>, b: Option<T>) -> Option<T> {
            a.or(b)
        }
        fn list(a: Vec<String>, b: Vec<String>) -> Vec<String> {
            if a.is_empty() {
                b
            } else {
                a
            }
        }
        JobConfig {
            base: pick(self.base, file.base),
            blowups: list(self.blowups, file.blowups),
            add: list(self.add, file.add),
            chain: pick(self.chain, file.chain),
            bundle: pick(self.bundle, file.bundle),
            h: pick(self.h, file.h),
            v: pick(self.v, file.v),
            curves: pick(self.curves, file.curves),
            box_bound: pick(self.box_bound, file.box_bound),
            no_catalog: self.no_catalog || file.no_catalog,
            no_quadratic: self.no_quadratic || file.no_quadratic,
            bare: self.bare || file.bare,
            curves_complete: self.curves_complete || file.curves_complete,
            n_range: pick(self.n_range, file.n_range),
            max_tails: pick(self.max_tails, file.max_tails),
            out: pick(self.out, file.out),
            format: pick(self.format, file.format),
            jobs: pick(self.jobs, file.jobs),
            only: list(self.only, file.only),
        }
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: JobConfig = serde_json::from_str(r#"{"base": "F2", "chain": "Z+F", "h": 1, "box": "orthant"}"#).unwrap();
        let flags = JobConfig { base: Some("F3".into()), ..JobConfig::default() };
        let merged = flags.over(file);
        assert_eq!(merged.base.as_deref(), Some("F3"));
        assert_eq!(merged.chain.as_deref(), Some("Z+F"));
        assert_eq!(merged.h, Some(1));
        assert_eq!(merged.box_bound.as_deref(), Some("orthant"));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(serde_json::from_str::<JobConfig>(r#"{"bsae": "F2"}"#).is_err());
        assert!(serde_json::from_str::<JobConfig>(r#"{"format": "json"}"#).is_ok());
    }
}
