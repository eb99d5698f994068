//! Pajek `.net` and `.clu` files.
//!
//! Supported `.net` sections: `*vertices N` (one-mode) or `*vertices N N1`
//! (two-mode, the first `N1` vertices form mode 1), then any number of
//! `*arcs`, `*edges`, `*arcslist` and `*edgeslist` sections. Keywords are
//! case-insensitive, indices are 1-based, `%` starts a comment line. Vertex
//! labels are either quoted (exact bytes between the quotes) or a bare token.
//! Anything after the label on a vertex line (coordinates, shapes) is ignored.

use std::fs;
use std::path::Path;

use crate::error::{pajek, Result};
use tqnet_core::{Num, Time, TimeHorizon};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StaticLink {
    /// zero-based
    pub tail: usize,
    /// zero-based
    pub head: usize,
    pub weight: f64,
    pub directed: bool,
}

/// A network as read from a `.net` file, before temporalization.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StaticNetwork {
    pub labels: Vec<String>,
    /// Size of mode 1 for two-mode networks.
    pub mode1: Option<usize>,
    pub links: Vec<StaticLink>,
}

impl StaticNetwork {
    pub fn is_two_mode(&self) -> bool {
        self.mode1.is_some()
    }

    pub fn arc_count(&self) -> usize {
        self.links.iter().filter(|l| l.directed).count()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Header,
    Vertices,
    Links { directed: bool, list: bool },
}

/// Splits off a quoted or bare label.
fn take_label(rest: &str) -> Option<(&str, &str)> {
    let rest = rest.trim_start();
    if rest.is_empty() {
        return None;
    }
    if let Some(quoted) = rest.strip_prefix('"') {
        let end = quoted.find('"')?;
        Some((&quoted[..end], &quoted[end + 1..]))
    } else {
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        Some((&rest[..end], &rest[end..]))
    }
}

pub fn parse_net(path: impl AsRef<Path>) -> Result<StaticNetwork> {
    parse_net_str(&fs::read_to_string(path)?)
}

pub fn parse_net_str(text: &str) -> Result<StaticNetwork> {
    let mut net = StaticNetwork::default();
    let mut defined: Vec<bool> = Vec::new();
    let mut section = Section::Header;
    let mut n = 0usize;

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if line.starts_with('*') {
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap_or("").to_ascii_lowercase();
            section = match keyword.as_str() {
                "*network" => continue,
                "*vertices" => {
                    if section != Section::Header {
                        return Err(pajek(line_no, "repeated *vertices header"));
                    }
                    let mut count = |what: &str| -> Result<Option<usize>> {
                        tokens
                            .next()
                            .map(|t| t.parse::<usize>().map_err(|_| pajek(line_no, format!("bad {what} in *vertices header: {t:?}"))))
                            .transpose()
                    };
                    n = count("vertex count")?.ok_or_else(|| pajek(line_no, "*vertices header without a count"))?;
                    net.mode1 = count("mode-1 size")?;
                    if let Some(n1) = net.mode1 {
                        if n1 > n {
                            return Err(pajek(line_no, format!("mode-1 size {n1} exceeds vertex count {n}")));
                        }
                    }
                    net.labels = (1..=n).map(|i| i.to_string()).collect();
                    defined = vec![false; n];
                    Section::Vertices
                }
                "*arcs" | "*edges" | "*arcslist" | "*edgeslist" => {
                    if section == Section::Header {
                        return Err(pajek(line_no, format!("{keyword} before *vertices")));
                    }
                    Section::Links { directed: keyword.starts_with("*arcs"), list: keyword.ends_with("list") }
                }
                other => return Err(pajek(line_no, format!("unsupported section {other}"))),
            };
            continue;
        }

        let index = |token: Option<&str>, what: &str| -> Result<usize> {
            let token = token.ok_or_else(|| pajek(line_no, format!("missing {what}")))?;
            let i: usize = token.parse().map_err(|_| pajek(line_no, format!("bad {what} {token:?}")))?;
            if i == 0 || i > n {
                return Err(pajek(line_no, format!("{what} {i} out of range 1..={n}")));
            }
            Ok(i - 1)
        };

        match section {
            Section::Header => return Err(pajek(line_no, "data before *vertices header")),
            Section::Vertices => {
                let (id_token, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
                let id = index(Some(id_token), "vertex index")?;
                if defined[id] {
                    return Err(pajek(line_no, format!("vertex {} redefined", id + 1)));
                }
                defined[id] = true;
                if let Some((label, _)) = take_label(rest) {
                    net.labels[id] = label.to_string();
                } else if rest.trim_start().starts_with('"') {
                    return Err(pajek(line_no, "unterminated quoted label"));
                }
            }
            Section::Links { directed, list } => {
                let mut tokens = line.split_whitespace();
                let tail = index(tokens.next(), "tail index")?;
                if list {
                    for t in tokens {
                        let head = index(Some(t), "head index")?;
                        net.links.push(StaticLink { tail, head, weight: 1.0, directed });
                    }
                } else {
                    let head = index(tokens.next(), "head index")?;
                    let weight = match tokens.next() {
                        Some(w) => w.parse::<f64>().map_err(|_| pajek(line_no, format!("bad weight {w:?}")))?,
                        None => 1.0,
                    };
                    net.links.push(StaticLink { tail, head, weight, directed });
                }
            }
        }
    }
    if section == Section::Header {
        return Err(pajek(text.lines().count().max(1), "missing *vertices header"));
    }
    Ok(net)
}

/// Emits a `.net` file with every label quoted: arcs first, then edges,
/// each in input order. Labels containing `"` cannot be represented.
pub fn write_net(net: &StaticNetwork) -> Result<String> {
    use std::fmt::Write;
    let mut out = String::new();
    match net.mode1 {
        Some(n1) => writeln!(out, "*vertices {} {}", net.labels.len(), n1),
        None => writeln!(out, "*vertices {}", net.labels.len()),
    }
    .unwrap();
    for (i, label) in net.labels.iter().enumerate() {
        if label.contains('"') || label.contains('\n') {
            return Err(crate::Error::Invalid(format!("label {label:?} cannot be written to a .net file")));
        }
        writeln!(out, "{} \"{}\"", i + 1, label).unwrap();
    }
    for (header, directed) in [("*arcs", true), ("*edges", false)] {
        let links: Vec<_> = net.links.iter().filter(|l| l.directed == directed).collect();
        if links.is_empty() {
            continue;
        }
        writeln!(out, "{header}").unwrap();
        for l in links {
            writeln!(out, "{} {} {}", l.tail + 1, l.head + 1, Num(l.weight)).unwrap();
        }
    }
    Ok(out)
}

/// Publication year per vertex, in `.net` vertex order. Year `0` marks a
/// vertex without a usable year.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TimePartition {
    pub years: Vec<Time>,
}

impl TimePartition {
    pub fn len(&self) -> usize {
        self.years.len()
    }

    pub fn is_empty(&self) -> bool {
        self.years.is_empty()
    }

    /// `[min, max]` over the non-zero years of the first `prefix` entries.
    pub fn horizon(&self, prefix: usize) -> Option<TimeHorizon> {
        let valid = self.years.iter().take(prefix).copied().filter(|&y| y != 0);
        let (lo, hi) = valid.fold(None, |acc: Option<(Time, Time)>, y| match acc {
            None => Some((y, y)),
            Some((lo, hi)) => Some((lo.min(y), hi.max(y))),
        })?;
        TimeHorizon::new(lo, hi).ok()
    }
}

pub fn parse_clu(path: impl AsRef<Path>) -> Result<TimePartition> {
    parse_clu_str(&fs::read_to_string(path)?)
}

pub fn parse_clu_str(text: &str) -> Result<TimePartition> {
    let mut expected: Option<usize> = None;
    let mut years = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if line.starts_with('*') {
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap_or("").to_ascii_lowercase();
            match keyword.as_str() {
                "*partition" => continue,
                "*vertices" if expected.is_none() => {
                    let t = tokens.next().ok_or_else(|| pajek(line_no, "*vertices header without a count"))?;
                    expected = Some(t.parse().map_err(|_| pajek(line_no, format!("bad vertex count {t:?}")))?);
                }
                _ => return Err(pajek(line_no, format!("unexpected {keyword} in partition file"))),
            }
            continue;
        }
        let Some(n) = expected else {
            return Err(pajek(line_no, "data before *vertices header"));
        };
        if years.len() == n {
            return Err(pajek(line_no, format!("more than {n} values")));
        }
        years.push(line.parse().map_err(|_| pajek(line_no, format!("bad partition value {line:?}")))?);
    }
    match expected {
        None => Err(pajek(last_line.max(1), "missing *vertices header")),
        Some(n) if years.len() != n => Err(pajek(last_line, format!("expected {n} values, found {}", years.len()))),
        Some(_) => Ok(TimePartition { years }),
    }
}

pub fn write_clu(part: &TimePartition) -> String {
    let mut out = format!("*vertices {}\n", part.years.len());
    for y in &part.years {
        out.push_str(&y.to_string());
        out.push('\n');
    }
    out
}
