//! Enumeration cache files.
//!
//! ```text
//! # hyperposet family=hypertree n=3 count=4
//! 3|123
//! 3|12,13
//! ...
//! ```
//!
//! One canonical structure per line in enumeration order. Loading checks the
//! header against the requested family and `n`, parses every line, and
//! requires the line count to match the header.

use std::fs;
use std::path::Path;

use super::{Family, Structure};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheHeader {
    pub family: Family,
    pub n: usize,
    pub count: usize,
}

impl CacheHeader {
    fn render(&self) -> String {
        format!("# hyperposet family={} n={} count={}", self.family, self.n, self.count)
    }
}

pub fn parse_header(line: &str) -> Result<CacheHeader> {
    let bad = || Error::Parse(format!("bad cache header {line:?}"));
    let rest = line.strip_prefix("# hyperposet ").ok_or_else(bad)?;
    let mut family = None;
    let mut n = None;
    let mut count = None;
    for field in rest.split_whitespace() {
        match field.split_once('=').ok_or_else(bad)? {
            ("family", v) => family = Some(v.parse::<Family>()?),
            ("n", v) => n = Some(v.parse().map_err(|_| bad())?),
            ("count", v) => count = Some(v.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    Ok(CacheHeader { family: family.ok_or_else(bad)?, n: n.ok_or_else(bad)?, count: count.ok_or_else(bad)? })
}

pub fn dump<S: Structure>(path: &Path, n: usize, elements: &[S]) -> Result<()> {
    let header = CacheHeader { family: S::FAMILY, n, count: elements.len() };
    let mut text = header.render();
    text.push('\n');
    for e in elements {
        text.push_str(&e.to_string());
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Error::Cache { path: path.display().to_string(), reason: e.to_string() })
}

pub fn load<S: Structure>(path: &Path, n: usize) -> Result<Vec<S>> {
    let err = |reason: String| Error::Cache { path: path.display().to_string(), reason };
    let text = fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
    let mut lines = text.lines();
    let header = parse_header(lines.next().unwrap_or("")).map_err(|e| err(e.to_string()))?;
    if header.family != S::FAMILY || header.n != n {
        return Err(err(format!(
            "holds family={} n={}, expected family={} n={n}",
            header.family, header.n, S::FAMILY
        )));
    }
    let mut out = Vec::with_capacity(header.count);
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let s = S::parse_line(line).map_err(|e| err(e.to_string()))?;
        if s.n() != n {
            return Err(err(format!("{line:?} is on {} vertices", s.n())));
        }
        out.push(s);
    }
    if out.len() != header.count {
        return Err(err(format!("header says {} structures, found {}", header.count, out.len())));
    }
    Ok(out)
}
