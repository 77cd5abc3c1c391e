//! Plain-text formats for the core combinatorial objects.
//!
//! * Weight diagram: `start=N left=C right=C WINDOW` where `C` is one of
//!   `o v ^ x` and `WINDOW` is a non-empty run of those characters, or `-`
//!   for an empty window (then `N` must be `0`).
//! * Bipartition: `[3,1],[2,2]` — two weakly decreasing comma-separated
//!   lists in square brackets; `[]` is the empty partition.
//! * Rational: `n` or `n/d` in lowest terms or not (normalised on parse).

use crate::diagram::{Bipartition, Label, WeightDiagram};
use crate::{Error, Result, Scalar};
use num::Zero;

fn parse_fill(tok: &str, key: &str) -> Result<Label> {
    let rest = tok
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected `{key}=<char>`, got `{tok}`")))?;
    let mut chars = rest.chars();
    let (Some(c), None) = (chars.next(), chars.next()) else {
        return Err(Error::Parse(format!("`{key}` needs a single character, got `{rest}`")));
    };
    Label::from_char(c).ok_or_else(|| Error::Parse(format!("bad label character `{c}`")))
}

/// Parse the `start=N left=C right=C WINDOW` format.
pub fn parse_weight_diagram(s: &str) -> Result<WeightDiagram> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let [start_tok, left_tok, right_tok, window_tok] = toks.as_slice() else {
        return Err(Error::Parse(format!(
            "expected 4 fields `start=N left=C right=C WINDOW`, got {} in `{s}`",
            toks.len()
        )));
    };
    let start_str = start_tok
        .strip_prefix("start=")
        .ok_or_else(|| Error::Parse(format!("expected `start=N`, got `{start_tok}`")))?;
    let start: i64 = start_str
        .parse()
        .map_err(|e| Error::Parse(format!("bad start `{start_str}`: {e}")))?;
    let left = parse_fill(left_tok, "left")?;
    let right = parse_fill(right_tok, "right")?;
    let window: Vec<Label> = if *window_tok == "-" {
        Vec::new()
    } else {
        window_tok
            .chars()
            .map(|c| Label::from_char(c).ok_or_else(|| Error::Parse(format!("bad label character `{c}`"))))
            .collect::<Result<_>>()?
    };
    if window.is_empty() && left == right && start != 0 {
        return Err(Error::Parse(format!(
            "empty window with equal fills requires start=0, got start={start}"
        )));
    }
    WeightDiagram::new(left, right, start, window)
}

fn parse_partition(s: &str) -> Result<Vec<u64>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[..]`, got `{s}`")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad part `{p}`: {e}")))
        })
        .collect()
}

/// Parse the `[3,1],[2,2]` bipartition format.
pub fn parse_bipartition(s: &str) -> Result<Bipartition> {
    let s = s.trim();
    // Split at the comma between `]` and `[`.
    let split = s
        .find("],[")
        .ok_or_else(|| Error::Parse(format!("expected `[..],[..]`, got `{s}`")))?;
    let (a, b) = s.split_at(split + 1);
    let b = &b[1..];
    Bipartition::new(parse_partition(a)?, parse_partition(b)?)
}

/// Parse an exact rational number, `n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let s = s.trim();
    if let Some((_, d)) = s.split_once('/') {
        // The library parser panics on a zero denominator; reject it first.
        let dz: num::BigInt = d
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad denominator `{d}`: {e}")))?;
        if dz.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
    }
    s.parse()
        .map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))
}

pub fn format_rational(r: &Scalar) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
