//! Turning a static network plus a year partition into a temporal network.
//!
//! A link dated `d` with weight `w` becomes `[(d, d+1, w)]` in the
//! instantaneous network and `[(d, last+1, w)]` in the cumulative one.
//! Two-mode links are dated by their mode-1 (event) endpoint, one-mode links
//! by their tail. Links whose date is `0` or outside the horizon are skipped
//! and listed in the [`Report`].

use crate::error::{Error, Result};
use crate::pajek::{StaticNetwork, TimePartition};
use tqnet_core::{Kind, NodeTable, TemporalNetwork, TemporalQuantity, Time, TimeHorizon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Instantaneous,
    Cumulative,
}

impl Mode {
    fn kind(self) -> Kind {
        match self {
            Mode::Instantaneous => Kind::Instantaneous,
            Mode::Cumulative => Kind::Cumulative,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub mode: Mode,
    /// Overrides the first year taken from the partition.
    pub first: Option<Time>,
    /// Overrides the last year taken from the partition.
    pub last: Option<Time>,
}

impl Options {
    pub fn new(mode: Mode) -> Self {
        Options { mode, first: None, last: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkippedLink {
    pub tail: usize,
    pub head: usize,
    pub year: Time,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub links_in: usize,
    /// Static links that contributed to some temporal link.
    pub placed: usize,
    pub skipped: Vec<SkippedLink>,
}

fn resolve_horizon(part: &TimePartition, dated: usize, opts: &Options) -> Result<TimeHorizon> {
    let derived = part.horizon(dated);
    let first = opts.first.or(derived.map(|h| h.first()));
    let last = opts.last.or(derived.map(|h| h.last()));
    match (first, last) {
        (Some(first), Some(last)) => Ok(TimeHorizon::new(first, last)?),
        _ => Err(Error::Invalid("partition has no valid years; give the horizon explicitly".into())),
    }
}

fn quantity(year: Time, weight: f64, horizon: TimeHorizon, mode: Mode) -> TemporalQuantity {
    let finish = match mode {
        Mode::Instantaneous => year + 1,
        Mode::Cumulative => horizon.end(),
    };
    TemporalQuantity::constant(year, finish, weight).expect("year lies inside the horizon")
}

/// Events (mode 1) × participants (mode 2). The partition must list the
/// mode-1 vertices first; it may cover all vertices or just mode 1.
pub fn temporalize_two_mode(net: &StaticNetwork, part: &TimePartition, opts: Options) -> Result<(TemporalNetwork, Report)> {
    let n1 = net.mode1.ok_or_else(|| Error::Invalid("expected a two-mode network".into()))?;
    let n = net.labels.len();
    if part.len() != n1 && part.len() != n {
        return Err(Error::Invalid(format!(
            "partition has {} values; expected {n1} (mode 1) or {n} (all vertices)",
            part.len()
        )));
    }
    let horizon = resolve_horizon(part, n1, &opts)?;
    let rows = NodeTable::new(net.labels[..n1].iter().cloned())?;
    let cols = NodeTable::new(net.labels[n1..].iter().cloned())?;
    let mut out = TemporalNetwork::two_mode(rows, cols, horizon);
    let mut report = Report { links_in: net.links.len(), ..Report::default() };
    for link in &net.links {
        let (event, participant) = match (link.tail < n1, link.head < n1) {
            (true, false) => (link.tail, link.head - n1),
            (false, true) => (link.head, link.tail - n1),
            _ => {
                return Err(Error::Invalid(format!(
                    "link {} -> {} does not connect the two modes",
                    link.tail + 1,
                    link.head + 1
                )))
            }
        };
        let year = part.years[event];
        if year == 0 || !horizon.contains(year) {
            report.skipped.push(SkippedLink { tail: link.tail, head: link.head, year });
            continue;
        }
        out.insert(event, participant, quantity(year, link.weight, horizon, opts.mode))?;
        report.placed += 1;
    }
    Ok((out.with_kind(opts.mode.kind())?, report))
}

/// One-mode network (e.g. citations) dated by the tail vertex. Arcs keep
/// their direction; a file with only edges gives an undirected network,
/// and edges mixed with arcs are added in both directions.
pub fn temporalize_one_mode(net: &StaticNetwork, part: &TimePartition, opts: Options) -> Result<(TemporalNetwork, Report)> {
    if net.is_two_mode() {
        return Err(Error::Invalid("expected a one-mode network".into()));
    }
    let n = net.labels.len();
    if part.len() != n {
        return Err(Error::Invalid(format!("partition has {} values; network has {n} vertices", part.len())));
    }
    let horizon = resolve_horizon(part, n, &opts)?;
    let directed = net.links.iter().any(|l| l.directed) || net.links.is_empty();
    let nodes = NodeTable::new(net.labels.iter().cloned())?;
    let mut out = TemporalNetwork::one_mode(nodes, horizon, directed);
    let mut report = Report { links_in: net.links.len(), ..Report::default() };
    for link in &net.links {
        let year = part.years[link.tail];
        if year == 0 || !horizon.contains(year) {
            report.skipped.push(SkippedLink { tail: link.tail, head: link.head, year });
            continue;
        }
        let q = quantity(year, link.weight, horizon, opts.mode);
        if directed && !link.directed && link.tail != link.head {
            out.insert(link.head, link.tail, q.clone())?;
        }
        out.insert(link.tail, link.head, q)?;
        report.placed += 1;
    }
    Ok((out.with_kind(opts.mode.kind())?, report))
}
