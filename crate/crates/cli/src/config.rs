//! Campaign configuration: a flat `key = value` file, one key per line,
//! `#` comments. Lists are comma separated.
//!
//! ```text
//! theorems = vertex-deletion, matching-deletion
//! n_range = 6..12
//! p_list = 1/2, 9/10
//! seed_list = 1
//! ab = 1:2, 2:3
//! n = 1, 2
//! quota = 40
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use abfactor::avoidance::CheckKind;
use abfactor::graph::ExtremalParams;
use abfactor::{Fraction, Limits};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {key}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub key: String,
    pub message: String,
}

/// A `k` grid entry: a fixed value or "whatever `b` is".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum KChoice {
    Fixed(usize),
    #[serde(serialize_with = "ser_b")]
    B,
}

fn ser_b<S: serde::Serializer>(s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str("b")
}

impl KChoice {
    pub fn resolve(self, b: usize) -> usize {
        match self {
            KChoice::Fixed(k) => k,
            KChoice::B => b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignConfig {
    pub theorems: Vec<CheckKind>,
    /// Inclusive vertex-count range for random graphs.
    pub n_range: (usize, usize),
    pub p_list: Vec<Fraction>,
    pub seed_list: Vec<u64>,
    pub ab: Vec<(usize, usize)>,
    pub n: Vec<usize>,
    pub m: Vec<usize>,
    pub k: Vec<KChoice>,
    /// Premise-satisfying instances to keep per cell.
    pub quota: usize,
    /// Random graphs drawn per cell before giving up on the quota.
    pub max_attempts: usize,
    pub extremal: Vec<ExtremalParams>,
    pub cap_n: usize,
    pub cap_deletions: usize,
    pub search_budget: u64,
    pub json_out: Option<PathBuf>,
    pub csv_out: Option<PathBuf>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        let limits = Limits::default();
        CampaignConfig {
            theorems: Vec::new(),
            n_range: (6, 10),
            p_list: vec![Fraction::new(1, 2)],
            seed_list: vec![1],
            ab: vec![(1, 2), (2, 3)],
            n: vec![1],
            m: vec![2],
            k: vec![KChoice::Fixed(2)],
            quota: 10,
            max_attempts: 1000,
            extremal: Vec::new(),
            cap_n: limits.forall_max_n,
            cap_deletions: limits.max_deletions,
            search_budget: limits.search_budget,
            json_out: None,
            csv_out: None,
        }
    }
}

impl CampaignConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            forall_max_n: self.cap_n,
            max_deletions: self.cap_deletions,
            search_budget: self.search_budget,
            ..Limits::default()
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let bad = |key: &str, message: String| ConfigError {
            line: 0,
            key: key.to_string(),
            message,
        };
        if self.theorems.is_empty() {
            return Err(bad("theorems", "at least one check is required".into()));
        }
        let (lo, hi) = self.n_range;
        if lo < 1 || lo > hi || hi > 64 {
            return Err(bad(
                "n_range",
                format!("need 1 <= lo <= hi <= 64, got {lo}..{hi}"),
            ));
        }
        if self.p_list.is_empty() {
            return Err(bad("p_list", "empty".into()));
        }
        if let Some(p) = self
            .p_list
            .iter()
            .find(|p| *p < &Fraction::zero() || *p > &Fraction::one())
        {
            return Err(bad("p_list", format!("{p} is not a probability")));
        }
        if self.seed_list.is_empty() {
            return Err(bad("seed_list", "empty".into()));
        }
        if let Some((a, b)) = self.ab.iter().find(|(a, b)| *a < 1 || a >= b) {
            return Err(bad("ab", format!("{a}:{b} needs 1 <= a < b")));
        }
        if self.n.contains(&0) {
            return Err(bad("n", "deletion sizes start at 1".into()));
        }
        if self.m.contains(&0) {
            return Err(bad("m", "star sizes start at 1".into()));
        }
        if self
            .k
            .iter()
            .any(|k| matches!(k, KChoice::Fixed(v) if *v < 2))
        {
            return Err(bad("k", "k starts at 2".into()));
        }
        if self.quota == 0 {
            return Err(bad("quota", "must be positive".into()));
        }
        if self.max_attempts < self.quota {
            return Err(bad("max_attempts", "must be at least quota".into()));
        }
        for e in &self.extremal {
            abfactor::graph::build_extremal(e.m, e.a, e.b, e.n)
                .map_err(|err| bad("extremal", err.to_string()))?;
        }
        Ok(())
    }
}

fn list<T, F>(value: &str, mut item: F) -> Result<Vec<T>, String>
where
    F: FnMut(&str) -> Result<T, String>,
{
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(&mut item)
        .collect()
}

fn int<T: FromStr>(s: &str) -> Result<T, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a non-negative integer"))
}

fn tuple(s: &str, len: usize) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != len {
        return Err(format!("{s:?} should have {len} colon-separated parts"));
    }
    parts.into_iter().map(int).collect()
}

impl FromStr for CampaignConfig {
    type Err = ConfigError;

    fn from_str(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = CampaignConfig::default();
        let mut seen: Vec<String> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(ConfigError {
                    line,
                    key: body.to_string(),
                    message: "expected key = value".into(),
                });
            };
            let (key, value) = (key.trim(), value.trim());
            let err = |message: String| ConfigError {
                line,
                key: key.to_string(),
                message,
            };
            if seen.iter().any(|k| k == key) {
                return Err(err("given twice".into()));
            }
            seen.push(key.to_string());
            match key {
                "theorems" => {
                    cfg.theorems =
                        list(value, |s| s.parse::<CheckKind>().map_err(|e| e.to_string()))
                            .map_err(err)?
                }
                "n_range" => {
                    let (lo, hi) = value
                        .split_once("..")
                        .ok_or_else(|| err("expected lo..hi".into()))?;
                    cfg.n_range = (int(lo).map_err(err)?, int(hi).map_err(err)?);
                }
                "p_list" => {
                    cfg.p_list = list(value, |s| s.parse::<Fraction>().map_err(|e| e.to_string()))
                        .map_err(err)?
                }
                "seed_list" => cfg.seed_list = list(value, int).map_err(err)?,
                "ab" => cfg.ab = list(value, |s| tuple(s, 2).map(|v| (v[0], v[1]))).map_err(err)?,
                "n" => cfg.n = list(value, int).map_err(err)?,
                "m" => cfg.m = list(value, int).map_err(err)?,
                "k" => {
                    cfg.k = list(value, |s| match s {
                        "b" => Ok(KChoice::B),
                        _ => int(s).map(KChoice::Fixed),
                    })
                    .map_err(err)?
                }
                "quota" => cfg.quota = int(value).map_err(err)?,
                "max_attempts" => cfg.max_attempts = int(value).map_err(err)?,
                "extremal" => {
                    cfg.extremal = list(value, |s| {
                        tuple(s, 4).map(|v| ExtremalParams {
                            m: v[0],
                            a: v[1],
                            b: v[2],
                            n: v[3],
                        })
                    })
                    .map_err(err)?
                }
                "cap_n" => cfg.cap_n = int(value).map_err(err)?,
                "cap_deletions" => cfg.cap_deletions = int(value).map_err(err)?,
                "search_budget" => cfg.search_budget = int(value).map_err(err)?,
                "json_out" => cfg.json_out = Some(PathBuf::from(value)),
                "csv_out" => cfg.csv_out = Some(PathBuf::from(value)),
                _ => return Err(err("unknown key".into())),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn join<T, F: Fn(&T) -> String>(items: &[T], f: F) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for CampaignConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorems = {}", join(&self.theorems, |t| t.to_string()))?;
        writeln!(f, "n_range = {}..{}", self.n_range.0, self.n_range.1)?;
        writeln!(f, "p_list = {}", join(&self.p_list, |p| p.to_string()))?;
        writeln!(
            f,
            "seed_list = {}",
            join(&self.seed_list, |s| s.to_string())
        )?;
        writeln!(f, "ab = {}", join(&self.ab, |(a, b)| format!("{a}:{b}")))?;
        writeln!(f, "n = {}", join(&self.n, |n| n.to_string()))?;
        writeln!(f, "m = {}", join(&self.m, |m| m.to_string()))?;
        writeln!(
            f,
            "k = {}",
            join(&self.k, |k| match k {
                KChoice::Fixed(v) => v.to_string(),
                KChoice::B => "b".to_string(),
            })
        )?;
        writeln!(f, "quota = {}", self.quota)?;
        writeln!(f, "max_attempts = {}", self.max_attempts)?;
        writeln!(
            f,
            "extremal = {}",
            join(&self.extremal, |e| format!(
                "{}:{}:{}:{}",
                e.m, e.a, e.b, e.n
            ))
        )?;
        writeln!(f, "cap_n = {}", self.cap_n)?;
        writeln!(f, "cap_deletions = {}", self.cap_deletions)?;
        writeln!(f, "search_budget = {}", self.search_budget)?;
        if let Some(p) = &self.json_out {
            writeln!(f, "json_out = {}", p.display())?;
        }
        if let Some(p) = &self.csv_out {
            writeln!(f, "csv_out = {}", p.display())?;
        }
        Ok(())
    }
}
