//! Circular and linear interval representations on integer geometry.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    /// Points live on `0..period`; an arc `(s, e)` runs clockwise from `s`
    /// to `e` and may wrap past zero.
    Circular {
        period: i64,
    },
    Linear,
}

/// Points (one per vertex, coincidences allowed) and closed intervals. Two
/// distinct vertices are adjacent iff some interval contains both points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    kind: IntervalKind,
    positions: Vec<i64>,
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    pub fn new(kind: IntervalKind, positions: Vec<i64>, intervals: Vec<(i64, i64)>) -> Result<Self> {
        match kind {
            IntervalKind::Circular { period } => {
                if period <= 0 {
                    return Err(Error::MalformedRep(format!("period {period} must be positive")));
                }
                let in_range = |x: i64| (0..period).contains(&x);
                if let Some(p) = positions.iter().find(|&&p| !in_range(p)) {
                    return Err(Error::MalformedRep(format!("position {p} outside 0..{period}")));
                }
                if let Some(iv) = intervals.iter().find(|(s, e)| !in_range(*s) || !in_range(*e)) {
                    return Err(Error::MalformedRep(format!("arc {iv:?} outside 0..{period}")));
                }
            }
            IntervalKind::Linear => {
                if let Some(iv) = intervals.iter().find(|(s, e)| s > e) {
                    return Err(Error::MalformedRep(format!("interval {iv:?} has start after end")));
                }
            }
        }
        Ok(IntervalRep {
            kind,
            positions,
            intervals,
        })
    }

    pub fn circular(period: i64, positions: Vec<i64>, arcs: Vec<(i64, i64)>) -> Result<Self> {
        Self::new(IntervalKind::Circular { period }, positions, arcs)
    }

    pub fn linear(positions: Vec<i64>, intervals: Vec<(i64, i64)>) -> Result<Self> {
        Self::new(IntervalKind::Linear, positions, intervals)
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn positions(&self) -> &[i64] {
        &self.positions
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn interval_contains(&self, (s, e): (i64, i64), p: i64) -> bool {
        match self.kind {
            IntervalKind::Linear => s <= p && p <= e,
            IntervalKind::Circular { .. } if s <= e => s <= p && p <= e,
            IntervalKind::Circular { .. } => p >= s || p <= e,
        }
    }

    /// The represented graph.
    pub fn realize(&self) -> SimpleGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for &iv in &self.intervals {
            let inside: Vec<Vertex> = (0..n)
                .filter(|&v| self.interval_contains(iv, self.positions[v]))
                .collect();
            for (i, &u) in inside.iter().enumerate() {
                for &w in &inside[i + 1..] {
                    edges.push((u, w));
                }
            }
        }
        SimpleGraph::from_edges(n, edges).expect("indices in range")
    }

    /// Cuts a circular representation open at `point`, which must be covered
    /// by no arc and carry no vertex. The result is linear and represents
    /// the same graph.
    pub fn cut_at(&self, point: i64) -> Result<IntervalRep> {
        let IntervalKind::Circular { period } = self.kind else {
            return Err(Error::MalformedRep("only circular representations can be cut".into()));
        };
        if self.positions.contains(&point) {
            return Err(Error::MalformedRep(format!("a vertex sits at cut point {point}")));
        }
        if self.intervals.iter().any(|&iv| self.interval_contains(iv, point)) {
            return Err(Error::MalformedRep(format!("cut point {point} is covered by an arc")));
        }
        let shift = |x: i64| (x - point).rem_euclid(period);
        IntervalRep::linear(
            self.positions.iter().map(|&p| shift(p)).collect(),
            self.intervals.iter().map(|&(s, e)| (shift(s), shift(e))).collect(),
        )
    }
}

/// Realizes a representation; free-function form of [`IntervalRep::realize`].
pub fn realize_interval(rep: &IntervalRep) -> SimpleGraph {
    rep.realize()
}

/// A linear interval strip: ends `a` and `b` sit at the minimum and maximum
/// positions, so their neighbourhoods are cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub rep: IntervalRep,
    pub graph: SimpleGraph,
    pub a: Vertex,
    pub b: Vertex,
}

impl Strip {
    /// Builds a strip from a linear representation, taking as `a` the lowest
    /// vertex at the minimum position and as `b` the highest vertex at the
    /// maximum position.
    pub fn from_rep(rep: IntervalRep) -> Result<Strip> {
        if rep.kind() != IntervalKind::Linear {
            return Err(Error::MalformedRep("a strip needs a linear representation".into()));
        }
        let pos = rep.positions();
        if pos.len() < 2 {
            return Err(Error::InvalidScheme("a strip needs two distinct ends".into()));
        }
        let a = (0..pos.len()).min_by_key(|&v| (pos[v], v)).unwrap();
        let b = (0..pos.len()).max_by_key(|&v| (pos[v], v)).unwrap();
        Self::with_ends(rep, a, b)
    }

    /// Builds a strip with explicit ends, validating the end conditions.
    pub fn with_ends(rep: IntervalRep, a: Vertex, b: Vertex) -> Result<Strip> {
        let graph = rep.realize();
        let strip = Strip { rep, graph, a, b };
        strip.validate()?;
        Ok(strip)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        self.graph.check_vertex(self.a)?;
        self.graph.check_vertex(self.b)?;
        if self.a == self.b {
            return Err(Error::InvalidScheme(format!(
                "strip ends coincide at vertex {}",
                self.a
            )));
        }
        let pos = self.rep.positions();
        if pos.len() != n {
            return Err(Error::MalformedRep("representation and graph disagree on size".into()));
        }
        let (lo, hi) = (pos.iter().min().unwrap(), pos.iter().max().unwrap());
        if pos[self.a] != *lo || pos[self.b] != *hi {
            return Err(Error::InvalidScheme("strip ends must be extreme points".into()));
        }
        for end in [self.a, self.b] {
            if !self.graph.is_clique(self.graph.neighbors(end)) {
                return Err(Error::InvalidScheme(format!(
                    "neighbourhood of end {end} is not a clique"
                )));
            }
        }
        Ok(())
    }

    /// Vertices other than the two ends, ascending.
    pub fn interior(&self) -> Vec<Vertex> {
        (0..self.graph.n()).filter(|&v| v != self.a && v != self.b).collect()
    }
}
