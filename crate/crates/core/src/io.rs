//! Text formats for groups and families.
//!
//! Group file:
//!
//! ```text
//! group S3
//! kind perm 3
//! gen 2 1 3
//! gen 2 3 1
//! end
//! ```
//!
//! or `kind matrix <dim> <q>` followed by row-major `gen` lines. Family file:
//!
//! ```text
//! family cyclotomic
//! prime 7 group catalog:Z6
//! prime 11 group z10.txt
//! tuple g1 g1
//! tuple e g1^3
//! end
//! ```
//!
//! Tuple labels are `e`, a generator `gK` (1-indexed), or a word such as `g1*g2^-1`.

use std::path::{Path, PathBuf};

use crate::catalog::catalog_group;
use crate::config::Config;
use crate::element::GroupElement;
use crate::error::GroupError;
use crate::group::{Domain, FiniteGroup};
use crate::matrix::Matrix;
use crate::perm::Perm;

fn parse_err(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, GroupError> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Parses a group file into its name and group.
pub fn parse_group(text: &str, cfg: &Config) -> Result<(String, FiniteGroup), GroupError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty group file"))?;
    let name = header
        .strip_prefix("group ")
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .ok_or_else(|| parse_err(ln, "expected `group <name>`"))?
        .to_string();
    let (ln, kind) = lines
        .next()
        .ok_or_else(|| parse_err(ln, "missing `kind` line"))?;
    let toks: Vec<&str> = kind.split_whitespace().collect();
    let domain = match toks.as_slice() {
        ["kind", "perm", n] => Domain::perm(parse_num(n, ln, "a degree")?),
        ["kind", "matrix", d, q] => {
            let d: usize = parse_num(d, ln, "a dimension")?;
            let q: u32 = parse_num(q, ln, "a field order")?;
            if d == 0 {
                return Err(parse_err(ln, "matrix dimension must be positive"));
            }
            Domain::matrix(d, q).map_err(|e| parse_err(ln, e.to_string()))?
        }
        _ => {
            return Err(parse_err(
                ln,
                "expected `kind perm <degree>` or `kind matrix <dim> <q>`",
            ))
        }
    };
    if let Domain::Perm { degree: 0 } = domain {
        return Err(parse_err(ln, "degree must be positive"));
    }
    let mut gens = Vec::new();
    let mut ended = false;
    let mut last = ln;
    for (ln, line) in lines.by_ref() {
        last = ln;
        if line == "end" {
            ended = true;
            break;
        }
        let rest = line
            .strip_prefix("gen")
            .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
            .ok_or_else(|| parse_err(ln, format!("expected `gen` or `end`, found `{line}`")))?;
        let nums = rest
            .split_whitespace()
            .map(|t| parse_num::<u32>(t, ln, "an integer"))
            .collect::<Result<Vec<_>, _>>()?;
        gens.push(element_from_numbers(&domain, nums).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    if !ended {
        return Err(parse_err(last, "missing `end`"));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "content after `end`"));
    }
    let group = FiniteGroup::build_with(domain, gens, cfg)?;
    Ok((name, group))
}

fn element_from_numbers(domain: &Domain, nums: Vec<u32>) -> Result<GroupElement, GroupError> {
    match domain {
        Domain::Perm { degree } => {
            if nums.len() != *degree {
                return Err(GroupError::MalformedElement(format!(
                    "expected {degree} images, found {}",
                    nums.len()
                )));
            }
            let images: Vec<usize> = nums.iter().map(|&x| x as usize).collect();
            Ok(GroupElement::Perm(Perm::from_one_based(&images)?))
        }
        Domain::Matrix(space) => {
            let d = space.dim;
            if nums.len() != d * d {
                return Err(GroupError::MalformedElement(format!(
                    "expected {} entries, found {}",
                    d * d,
                    nums.len()
                )));
            }
            let m = Matrix::from_entries(d, nums, &space.field)?;
            Ok(GroupElement::matrix(m, space.field.clone()))
        }
    }
}

/// Serializes a group in the group file format.
pub fn write_group(name: &str, g: &FiniteGroup) -> String {
    let mut out = format!("group {name}\nkind {}\n", g.domain());
    for e in g.generators() {
        let nums: Vec<String> = match e {
            GroupElement::Perm(p) => p.images().iter().map(|&x| (x + 1).to_string()).collect(),
            GroupElement::Matrix(m) => m.matrix.entries().iter().map(|x| x.to_string()).collect(),
        };
        out.push_str("gen ");
        out.push_str(&nums.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

pub fn read_group(path: &Path, cfg: &Config) -> Result<(String, FiniteGroup), GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
    parse_group(&text, cfg)
}

/// Resolves `catalog:NAME` or a path to a group file (relative to `base`).
pub fn load_group_ref(
    spec: &str,
    base: Option<&Path>,
    cfg: &Config,
) -> Result<(String, FiniteGroup), GroupError> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok((name.to_string(), catalog_group(name, cfg)?));
    }
    let path: PathBuf = match base {
        Some(b) if Path::new(spec).is_relative() => b.join(spec),
        _ => PathBuf::from(spec),
    };
    read_group(&path, cfg)
}

/// A parsed family file.
#[derive(Clone, Debug)]
pub struct FamilyFile {
    pub name: String,
    pub factors: Vec<(u64, String, FiniteGroup)>,
    /// One element per factor, in the factors' internal permutation form.
    pub tuples: Vec<Vec<Perm>>,
}

/// Evaluates a generator word such as `g1*g2^-1` in a group.
pub fn eval_word(word: &str, g: &FiniteGroup) -> Result<Perm, String> {
    let gens = g.perm_generators();
    let mut acc = g.identity_perm();
    for factor in word.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<i64>()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?,
            ),
            None => (factor, 1),
        };
        let p = if base == "e" {
            g.identity_perm()
        } else {
            let k: usize = base
                .strip_prefix('g')
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| format!("bad generator label `{base}`"))?;
            if k == 0 || k > gens.len() {
                return Err(format!(
                    "generator g{k} out of range (group has {})",
                    gens.len()
                ));
            }
            gens[k - 1].clone()
        };
        acc = acc.compose(&p.pow(exp));
    }
    Ok(acc)
}

pub fn parse_family(
    text: &str,
    base: Option<&Path>,
    cfg: &Config,
) -> Result<FamilyFile, GroupError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty family file"))?;
    let name = header
        .strip_prefix("family ")
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .ok_or_else(|| parse_err(ln, "expected `family <name>`"))?
        .to_string();
    let mut factors: Vec<(u64, String, FiniteGroup)> = Vec::new();
    let mut raw_tuples: Vec<(usize, Vec<String>)> = Vec::new();
    let mut ended = false;
    let mut last = ln;
    for (ln, line) in lines.by_ref() {
        last = ln;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["end"] => {
                ended = true;
                break;
            }
            ["prime", ell, "group", spec] => {
                if !raw_tuples.is_empty() {
                    return Err(parse_err(ln, "`prime` lines must precede `tuple` lines"));
                }
                let ell: u64 = parse_num(ell, ln, "a prime")?;
                let (gname, g) = load_group_ref(spec, base, cfg).map_err(|e| match e {
                    GroupError::CapExceeded { .. } => e,
                    other => parse_err(ln, other.to_string()),
                })?;
                factors.push((ell, gname, g));
            }
            ["tuple", labels @ ..] => {
                raw_tuples.push((ln, labels.iter().map(|s| s.to_string()).collect()))
            }
            _ => return Err(parse_err(ln, format!("unrecognized line `{line}`"))),
        }
    }
    if !ended {
        return Err(parse_err(last, "missing `end`"));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "content after `end`"));
    }
    let mut tuples = Vec::new();
    for (ln, labels) in raw_tuples {
        if labels.len() != factors.len() {
            return Err(parse_err(
                ln,
                format!(
                    "tuple has {} labels for {} factors",
                    labels.len(),
                    factors.len()
                ),
            ));
        }
        let t = labels
            .iter()
            .zip(&factors)
            .map(|(l, (_, _, g))| eval_word(l, g).map_err(|m| parse_err(ln, m)))
            .collect::<Result<Vec<_>, _>>()?;
        tuples.push(t);
    }
    Ok(FamilyFile {
        name,
        factors,
        tuples,
    })
}

pub fn read_family(path: &Path, cfg: &Config) -> Result<FamilyFile, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
    parse_family(&text, path.parent(), cfg)
}
