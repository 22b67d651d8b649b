//! Text file format for point sets: a header line `n=<n> p=<p> k=<k>`
//! followed by one point per line, coordinates as canonical element indices
//! 0..q-1 separated by commas.

use std::fmt::Write as _;

use capbound::{FieldSpec, PointSet};

pub fn write_pointset(s: &PointSet) -> String {
    let f = s.field();
    let mut out = String::new();
    let _ = writeln!(out, "n={} p={} k={}", s.dim(), f.p(), f.k());
    for p in s.points() {
        let coords: Vec<String> = p.coords().iter().map(|c| c.index().to_string()).collect();
        let _ = writeln!(out, "{}", coords.join(","));
    }
    out
}

/// Parses the format written by [`write_pointset`]. The field is rebuilt
/// with the canonical modulus for (p, k).
pub fn read_pointset(text: &str) -> Result<PointSet, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty point set file")?;
    let mut n = None;
    let mut p = None;
    let mut k = None;
    for part in header.split_whitespace() {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bad header field {part}"))?;
        let value: u32 = value
            .parse()
            .map_err(|_| format!("bad header value {part}"))?;
        match key {
            "n" => n = Some(value),
            "p" => p = Some(value),
            "k" => k = Some(value),
            _ => return Err(format!("unknown header key {key}")),
        }
    }
    let (n, p, k) = match (n, p, k) {
        (Some(n), Some(p), Some(k)) => (n, p, k),
        _ => return Err("header must declare n, p and k".into()),
    };
    let field = FieldSpec::make_field(p, k).map_err(|e| e.to_string())?;
    let mut set = PointSet::empty(field.clone(), n as usize).map_err(|e| e.to_string())?;
    for line in lines {
        let coords: Result<Vec<u32>, _> =
            line.split(',').map(|c| c.trim().parse::<u32>()).collect();
        let coords = coords.map_err(|_| format!("bad coordinate line {line:?}"))?;
        if coords.len() != n as usize {
            return Err(format!("expected {n} coordinates, got {}", coords.len()));
        }
        if coords.iter().any(|&c| c >= field.q()) {
            return Err(format!("coordinate out of range in line {line:?}"));
        }
        let point = set.point_from_indices(&coords).map_err(|e| e.to_string())?;
        set.push(point).map_err(|e| e.to_string())?;
    }
    Ok(set)
}
