//! Share-size accounting and information rates.
//!
//! Everything here is in payload symbols: header bytes are framing and are
//! not counted. Payloads come from each scheme's own geometry calculator,
//! and rates are exact rationals `secret symbols / total payload symbols`.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::pets::PetsGeometry;
use crate::share::SchemeId;
use crate::ssms::SsmsGeometry;

pub type Rate = Ratio<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RateReport {
    pub scheme: SchemeId,
    pub t: usize,
    pub n: usize,
    pub sym_s: usize,
    pub sym_k: usize,
    pub per_share_payload: usize,
    pub total_payload: usize,
    pub rate: Rate,
}

/// Per-share payload in symbols for a secret of `sym_s` and key of `sym_k` symbols.
pub fn payload_of(scheme: SchemeId, sym_s: usize, sym_k: usize, t: usize, n: usize) -> Result<usize> {
    if t == 0 || t > n {
        return Err(Error::InvalidParameters(format!("invalid threshold ({t},{n})")));
    }
    Ok(match scheme {
        SchemeId::Shamir => sym_s,
        SchemeId::Ssms => SsmsGeometry::from_symbols(sym_s, sym_k, t, n)?.payload(),
        SchemeId::Pets => PetsGeometry::from_symbols(sym_s, sym_k, t, n)?.payload(),
    })
}

pub fn rate_of(scheme: SchemeId, sym_s: usize, sym_k: usize, t: usize, n: usize) -> Result<RateReport> {
    let per_share_payload = payload_of(scheme, sym_s, sym_k, t, n)?;
    let total_payload = per_share_payload * n;
    if total_payload == 0 {
        return Err(Error::InvalidParameters("rate undefined for empty shares".into()));
    }
    Ok(RateReport {
        scheme,
        t,
        n,
        sym_s,
        sym_k,
        per_share_payload,
        total_payload,
        rate: Rate::new(sym_s as u64, total_payload as u64),
    })
}

/// `delta * sym_s / (sym_s + sym_k)`, the PETS rate with `t = delta * n`.
pub fn rate_asymptotic_pets(delta: Rate, sym_s: usize, sym_k: usize) -> Result<Rate> {
    if delta <= Rate::from_integer(0) || delta > Rate::from_integer(1) {
        return Err(Error::InvalidParameters(format!("delta {delta} outside (0, 1]")));
    }
    if sym_s + sym_k == 0 {
        return Err(Error::InvalidParameters("rate undefined for empty secret and key".into()));
    }
    Ok(delta * Rate::new(sym_s as u64, (sym_s + sym_k) as u64))
}

/// Parses `a/b` or an integer.
pub fn parse_rate(s: &str) -> Result<Rate> {
    let bad = || Error::InvalidParameters(format!("cannot parse `{s}` as a fraction"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(bad());
    }
    Ok(Rate::new(num, den))
}

/// Payloads and rates for every scheme, every geometry, every `1 <= t <= n <= max_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepTable {
    pub rows: Vec<RateReport>,
}

pub fn scheme_sweep(max_n: usize, geometries: &[(usize, usize)]) -> Result<SweepTable> {
    let mut rows = Vec::new();
    for &(sym_s, sym_k) in geometries {
        for n in 1..=max_n {
            for t in 1..=n {
                for scheme in SchemeId::ALL {
                    rows.push(rate_of(scheme, sym_s, sym_k, t, n)?);
                }
            }
        }
    }
    Ok(SweepTable { rows })
}

impl SweepTable {
    /// Rows of one scheme at threshold `t = n`, ordered by `n`.
    pub fn full_threshold(&self, scheme: SchemeId, sym_s: usize, sym_k: usize) -> Vec<RateReport> {
        self.rows
            .iter()
            .filter(|r| r.scheme == scheme && r.t == r.n && r.sym_s == sym_s && r.sym_k == sym_k)
            .copied()
            .collect()
    }

    pub fn to_csv(&self) -> String {
        render_csv(&self.rows)
    }

    pub fn to_text(&self) -> String {
        render_text(&self.rows)
    }
}

/// The `(2, 3)` comparison over GF(4): 512-symbol secret, 128-symbol key.
pub fn reference_examples() -> Result<Vec<RateReport>> {
    SchemeId::ALL
        .into_iter()
        .map(|scheme| rate_of(scheme, 512, 128, 2, 3))
        .collect()
}

const COLUMNS: [&str; 9] = [
    "scheme", "t", "n", "sym_s", "sym_k", "per_share", "total", "rate", "rate_decimal",
];

fn cells(r: &RateReport) -> [String; 9] {
    [
        r.scheme.name().to_string(),
        r.t.to_string(),
        r.n.to_string(),
        r.sym_s.to_string(),
        r.sym_k.to_string(),
        r.per_share_payload.to_string(),
        r.total_payload.to_string(),
        format!("{}/{}", r.rate.numer(), r.rate.denom()),
        format!("{:.6}", *r.rate.numer() as f64 / *r.rate.denom() as f64),
    ]
}

pub fn render_csv(rows: &[RateReport]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&cells(r).join(","));
        out.push('\n');
    }
    out
}

pub fn render_text(rows: &[RateReport]) -> String {
    let body: Vec<[String; 9]> = rows.iter().map(cells).collect();
    let mut widths = COLUMNS.map(str::len);
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |cols: &[String]| {
        let parts: Vec<String> = cols
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&COLUMNS.map(String::from));
    for row in &body {
        line(row);
    }
    out
}
