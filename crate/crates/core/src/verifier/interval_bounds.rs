use crate::coloring::clique_number;
use crate::error::{Error, Result};
use crate::generators::{IntervalKind, IntervalRep, Strip};
use crate::graph::{SimpleGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBoundReport {
    pub omega: usize,
    pub bound: usize,
    /// Largest square degree over the checked vertices, with the first
    /// vertex attaining it.
    pub max_square_degree: usize,
    pub argmax: Option<Vertex>,
    pub holds: bool,
}

fn report(g: &SimpleGraph, vertices: &[Vertex], bound: impl Fn(usize) -> usize) -> IntervalBoundReport {
    let omega = clique_number(g).0;
    let degs = g.square_degrees();
    let mut best: Option<(usize, Vertex)> = None;
    for &v in vertices {
        if best.is_none_or(|(d, _)| degs[v] > d) {
            best = Some((degs[v], v));
        }
    }
    let bound = bound(omega);
    let max_square_degree = best.map_or(0, |(d, _)| d);
    IntervalBoundReport {
        omega,
        bound,
        max_square_degree,
        argmax: best.map(|(_, v)| v),
        holds: max_square_degree <= bound,
    }
}

/// Square degrees of a circular interval graph against `4ω − 4`.
pub fn check_circular_bound(rep: &IntervalRep) -> Result<IntervalBoundReport> {
    if !matches!(rep.kind(), IntervalKind::Circular { .. }) {
        return Err(Error::Precondition(
            "the 4ω−4 check takes a circular representation".into(),
        ));
    }
    let g = rep.realize();
    let all: Vec<Vertex> = (0..g.n()).collect();
    Ok(report(&g, &all, |w| (4 * w).saturating_sub(4)))
}

/// Square degrees of the neighbours of end `a` of a linear interval strip
/// against `3ω − 3`.
pub fn check_strip_bound(strip: &Strip) -> Result<IntervalBoundReport> {
    strip.validate()?;
    Ok(report(&strip.graph, strip.graph.neighbors(strip.a), |w| {
        (3 * w).saturating_sub(3)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_examples() {
        let c5 = IntervalRep::circular(5, (0..5).collect(), (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
        let r = check_circular_bound(&c5).unwrap();
        assert_eq!((r.omega, r.max_square_degree, r.bound, r.holds), (2, 4, 4, true));

        let k4 = IntervalRep::circular(8, vec![0, 1, 2, 3], vec![(0, 3)]).unwrap();
        let r = check_circular_bound(&k4).unwrap();
        assert_eq!((r.max_square_degree, r.bound), (3, 12));

        let p4 = Strip::from_rep(IntervalRep::linear(vec![0, 1, 2, 3], vec![(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        let r = check_strip_bound(&p4).unwrap();
        assert_eq!((r.argmax, r.max_square_degree, r.bound), (Some(1), 3, 3));
        assert!(check_circular_bound(&p4.rep).is_err());
    }
}
