//! Cycle notation such as `(0 1 2)(3 4)`, with optional commas.

use anyhow::{bail, Context, Result};
use vtham::perm::Permutation;

pub fn parse_cycles(s: &str, degree: usize) -> Result<Permutation> {
    let s = s.trim();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            bail!("expected `(` in `{s}`");
        };
        let close = body.find(')').with_context(|| format!("unclosed cycle in `{s}`"))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().with_context(|| format!("bad point `{t}`")))
            .collect::<Result<Vec<_>>>()?;
        if let Some(&p) = points.iter().find(|&&p| p >= degree) {
            bail!("point {p} outside degree {degree}");
        }
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs).with_context(|| format!("`{s}` is not a permutation"))
}
