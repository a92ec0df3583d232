//! Neighbourhood structure of one edge in `L(F)²`: the rings `A`, `B`, `C`
//! around `e = u₁u₂`, the degree identity, and the three-way case split with
//! the exact inequalities each case relies on.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeLabel, Multigraph, SimpleGraph, Vertex};
use crate::verifier::config::{wide, Config};
use crate::verifier::report::{q, CheckRow, Relation, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SparsityCase {
    One,
    Two,
    Three,
}

impl SparsityCase {
    pub fn number(self) -> u8 {
        match self {
            SparsityCase::One => 1,
            SparsityCase::Two => 2,
            SparsityCase::Three => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsityReport {
    pub edge: EdgeLabel,
    /// `Δ(F)`; the case analysis assumes every degree equals it.
    pub delta: usize,
    pub regular: bool,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub c: Vec<Vertex>,
    /// Copies of `e` other than `e` itself.
    pub m: usize,
    /// `lambda[i]` = vertices of `A ∪ B` with `i` edges to `{u₁, u₂}`.
    pub lambda: Vec<usize>,
    /// `|E(A ∪ B)|` with multiplicity.
    pub inner_edges: usize,
    /// `|E(A∪B)| + (2Δ−1)|M| + Σ_{i≥2} (i−1)Δ|Λᵢ|`.
    pub deficiency: usize,
    /// `Σ_{c∈C} |E(c, A∪B)|·(Δ − |E(c, A∪B)|)`.
    pub second_ring_sum: usize,
    pub case: SparsityCase,
    pub c_prime: Vec<Vertex>,
    /// `w(c₁, c₂)` for `c₁ <= c₂` in `C′`.
    pub pair_walks: Vec<((Vertex, Vertex), usize)>,
    pub square_degree: usize,
    pub induced_edges: usize,
    /// `induced_edges / C(2Δ(Δ−1), 2)`, absent when the denominator is 0.
    pub ratio: Option<Q>,
    /// The exact inequalities of the case that applies; empty when `F` is
    /// not regular.
    pub checks: Vec<CheckRow>,
}

impl SparsityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckRow::pass)
    }
}

/// Line graph and its square, shared by all edges of one multigraph.
pub struct SparsityContext<'a> {
    f: &'a Multigraph,
    labels: Vec<EdgeLabel>,
    sq: SimpleGraph,
    incident: Vec<Vec<usize>>,
    adj: Vec<Vec<(Vertex, usize)>>,
    mult: Vec<Vec<usize>>,
    degrees: Vec<usize>,
    delta: usize,
}

impl<'a> SparsityContext<'a> {
    pub fn new(f: &'a Multigraph) -> Self {
        let line = f.line_graph();
        let sq = line.graph.square();
        let mut incident = vec![Vec::new(); f.n()];
        for (i, l) in line.labels.iter().enumerate() {
            incident[l.u].push(i);
            incident[l.v].push(i);
        }
        let mut mult = vec![vec![0; f.n()]; f.n()];
        for ((u, v), k) in f.pairs() {
            mult[u][v] = k;
            mult[v][u] = k;
        }
        let degrees = f.degrees();
        let delta = degrees.iter().copied().max().unwrap_or(0);
        SparsityContext {
            f,
            labels: line.labels,
            sq,
            incident,
            adj: f.weighted_adjacency(),
            mult,
            degrees,
            delta,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_regular(&self) -> bool {
        self.degrees.iter().all(|&d| d == self.delta)
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.labels.len() {
            return Err(Error::InvalidParameters(format!(
                "edge index {e} out of range ({} edges)",
                self.labels.len()
            )));
        }
        Ok(())
    }

    fn ring_of(&self, e: usize) -> Rings {
        let EdgeLabel { u: u1, v: u2, .. } = self.labels[e];
        let delta = self.delta;
        let n = self.f.n();
        let others = |u: Vertex, skip: Vertex| -> Vec<Vertex> {
            self.adj[u].iter().map(|&(x, _)| x).filter(|&x| x != skip).collect()
        };
        let a = others(u1, u2);
        let b = others(u2, u1);
        let mut in_ab = FixedBitSet::with_capacity(n);
        for &x in a.iter().chain(&b) {
            in_ab.insert(x);
        }
        let ab: Vec<Vertex> = in_ab.ones().collect();
        let mut in_c = FixedBitSet::with_capacity(n);
        for &x in &ab {
            for &(y, _) in &self.adj[x] {
                if !in_ab.contains(y) && y != u1 && y != u2 {
                    in_c.insert(y);
                }
            }
        }
        let c: Vec<Vertex> = in_c.ones().collect();
        let m = self.mult[u1][u2] - 1;
        let mut lambda = vec![0; 2 * delta + 1];
        for &x in &ab {
            lambda[self.mult[x][u1] + self.mult[x][u2]] += 1;
        }
        let inner_edges: usize = self
            .f
            .pairs()
            .filter(|&((x, y), _)| in_ab.contains(x) && in_ab.contains(y))
            .map(|(_, k)| k)
            .sum();
        let deficiency = inner_edges
            + (2 * delta).saturating_sub(1) * m
            + lambda
                .iter()
                .enumerate()
                .skip(2)
                .map(|(i, &cnt)| (i - 1) * delta * cnt)
                .sum::<usize>();
        let to_ab: Vec<usize> = c
            .iter()
            .map(|&x| {
                self.adj[x]
                    .iter()
                    .filter(|&&(y, _)| in_ab.contains(y))
                    .map(|&(_, k)| k)
                    .sum()
            })
            .collect();
        Rings {
            a,
            b,
            ab,
            c,
            to_ab,
            m,
            lambda,
            inner_edges,
            deficiency,
        }
    }

    /// Returns `(formula, direct)` for the degree of edge `e` in `L(F)²`.
    pub fn degree_identity(&self, e: usize) -> Result<(usize, usize)> {
        self.check_edge(e)?;
        if !self.is_regular() {
            return Err(Error::Precondition(format!("multigraph is not {}-regular", self.delta)));
        }
        let rings = self.ring_of(e);
        let total = 2 * self.delta * self.delta.saturating_sub(1);
        let formula = total
            .checked_sub(rings.deficiency)
            .ok_or_else(|| Error::Precondition(format!("deficiency {} exceeds 2Δ(Δ−1) = {total}", rings.deficiency)))?;
        Ok((formula, self.sq.degree(e)))
    }

    pub fn report(&self, e: usize, config: &Config) -> Result<SparsityReport> {
        self.check_edge(e)?;
        let rings = self.ring_of(e);
        let delta = self.delta;
        let dq = q(delta as i128);
        let (eps1, eps2, eps3) = (wide(config.eps1), wide(config.eps2), wide(config.eps3));

        let second_ring_sum: usize = rings.to_ab.iter().map(|&d| d * (delta - d)).sum();
        let case = if q(rings.deficiency as i128) > eps1 * dq * dq {
            SparsityCase::One
        } else if q(second_ring_sum as i128) > eps2 * dq * dq * dq {
            SparsityCase::Two
        } else {
            SparsityCase::Three
        };

        let nbhd = self.sq.row(e);
        let square_degree = nbhd.count_ones(..);
        let inside: Vec<usize> = nbhd.ones().map(|x| self.sq.row(x).intersection(nbhd).count()).collect();
        let induced_edges = inside.iter().sum::<usize>() / 2;
        let top = 2 * delta * delta.saturating_sub(1);
        let ratio = (top >= 2).then(|| q(induced_edges as i128) / q((top * (top - 1) / 2) as i128));

        let in_cp: Vec<bool> = rings.to_ab.iter().map(|&d| q(d as i128) >= eps3 * dq).collect();
        let c_prime: Vec<Vertex> = rings
            .c
            .iter()
            .zip(&in_cp)
            .filter(|(_, &k)| k)
            .map(|(&x, _)| x)
            .collect();
        let pair_walks = self.pair_walks(&rings, &c_prime);

        let regular = self.is_regular();
        let mut checks = Vec::new();
        if regular {
            let id = format!("{}-{}#{}", self.labels[e].u, self.labels[e].v, self.labels[e].copy);
            let row = |name: &str, lhs: Q, rel, rhs: Q| CheckRow::new(id.clone(), name, lhs, rel, rhs);
            let sd = q(square_degree as i128);
            let ind = q(induced_edges as i128);
            let d2 = dq * dq;
            let d4 = d2 * d2;
            checks.push(row(
                "degree_identity",
                q(top as i128) - q(rings.deficiency as i128),
                Relation::Eq,
                sd,
            ));
            match case {
                SparsityCase::One => {
                    checks.push(row("case1_degree", sd, Relation::Lt, (q(2) - eps1) * d2));
                    let pairs = q((square_degree * square_degree.saturating_sub(1) / 2) as i128);
                    checks.push(row("case1_induced_pairs", ind, Relation::Le, pairs));
                    let bound = (q(2) - q(2) * eps1 + eps1 * eps1 / q(2)) * d4;
                    checks.push(row("case1_induced", ind, Relation::Lt, bound));
                }
                SparsityCase::Two => {
                    let walks = self.walks_leaving(nbhd);
                    let per_edge = nbhd
                        .ones()
                        .zip(&inside)
                        .filter(|&(x, &cnt)| cnt + walks[x] > 2 * delta * delta)
                        .count();
                    let total: usize = nbhd.ones().map(|x| walks[x]).sum();
                    let paths = delta * second_ring_sum;
                    checks.push(row(
                        "case2_per_edge_walk_bound",
                        q(per_edge as i128),
                        Relation::Eq,
                        q(0),
                    ));
                    checks.push(row(
                        "case2_walks_vs_paths",
                        q(total as i128),
                        Relation::Ge,
                        q(paths as i128),
                    ));
                    checks.push(row("case2_walks", q(total as i128), Relation::Gt, eps2 * d4));
                    let hs = q(2) * d2 * sd - q(total as i128);
                    checks.push(row("case2_handshake", q(2) * ind, Relation::Le, hs));
                    checks.push(row("case2_induced", ind, Relation::Lt, (q(2) - eps2 / q(2)) * d4));
                }
                SparsityCase::Three => {
                    checks.extend(self.case3_rows(&rings, &c_prime, &pair_walks, &in_cp, config, &row));
                }
            }
        }

        Ok(SparsityReport {
            edge: self.labels[e],
            delta,
            regular,
            a: rings.a,
            b: rings.b,
            c: rings.c,
            m: rings.m,
            lambda: rings.lambda,
            inner_edges: rings.inner_edges,
            deficiency: rings.deficiency,
            second_ring_sum,
            case,
            c_prime,
            pair_walks,
            square_degree,
            induced_edges,
            ratio,
            checks,
        })
    }

    /// For every edge `e₁`, the number of three-edge walks starting with
    /// `e₁` whose last edge lies outside `nbhd`.
    fn walks_leaving(&self, nbhd: &FixedBitSet) -> Vec<usize> {
        let n = self.f.n();
        let out: Vec<usize> = (0..n)
            .map(|z| self.incident[z].iter().filter(|&&j| !nbhd.contains(j)).count())
            .collect();
        let g: Vec<usize> = (0..n)
            .map(|y| {
                self.incident[y]
                    .iter()
                    .map(|&j| {
                        let l = self.labels[j];
                        out[if l.u == y { l.v } else { l.u }]
                    })
                    .sum()
            })
            .collect();
        self.labels.iter().map(|l| g[l.u] + g[l.v]).collect()
    }

    fn pair_walks(&self, rings: &Rings, c_prime: &[Vertex]) -> Vec<((Vertex, Vertex), usize)> {
        let mut out = Vec::new();
        for (i, &c1) in c_prime.iter().enumerate() {
            for &c2 in &c_prime[i..] {
                let w: usize = rings
                    .ab
                    .iter()
                    .map(|&a| {
                        let (m1, m2) = (self.mult[a][c1], self.mult[a][c2]);
                        if c1 == c2 {
                            m1 * m1.saturating_sub(1) / 2
                        } else {
                            m1 * m2
                        }
                    })
                    .sum();
                out.push(((c1, c2), w));
            }
        }
        out
    }

    fn case3_rows(
        &self,
        rings: &Rings,
        c_prime: &[Vertex],
        pair_walks: &[((Vertex, Vertex), usize)],
        in_cp: &[bool],
        config: &Config,
        row: &dyn Fn(&str, Q, Relation, Q) -> CheckRow,
    ) -> Vec<CheckRow> {
        let dq = q(self.delta as i128);
        let (eps2, eps3) = (wide(config.eps2), wide(config.eps3));
        let choose2 = |x: Q| x * (x - q(1)) / q(2);
        let mut rows = Vec::new();

        let to_cp: Vec<usize> = rings
            .ab
            .iter()
            .map(|&a| c_prime.iter().map(|&c| self.mult[a][c]).sum())
            .collect();
        let by_vertex: Q = to_cp.iter().map(|&d| choose2(q(d as i128))).sum();
        let by_pair: usize = pair_walks.iter().map(|&(_, w)| w).sum();
        rows.push(row("case3_pair_identity", q(by_pair as i128), Relation::Eq, by_vertex));

        let k = rings.ab.len();
        let jensen1 = if k == 0 {
            q(0)
        } else {
            let avg = q(to_cp.iter().sum::<usize>() as i128) / q(k as i128);
            q(k as i128) * choose2(avg)
        };
        rows.push(row("case3_jensen_vertices", by_vertex, Relation::Ge, jensen1));

        let slots = c_prime.len() * c_prime.len().saturating_sub(1) / 2 + c_prime.len();
        let lhs: Q = pair_walks.iter().map(|&(_, w)| choose2(q(w as i128))).sum();
        let jensen2 = if slots == 0 {
            q(0)
        } else {
            q(slots as i128) * choose2(q(by_pair as i128) / q(slots as i128))
        };
        rows.push(row("case3_jensen_pairs", lhs, Relation::Ge, jensen2));

        rows.push(row(
            "case3_c_prime_size",
            q(c_prime.len() as i128),
            Relation::Le,
            q(2) * dq / eps3,
        ));
        let light: usize = rings
            .to_ab
            .iter()
            .zip(in_cp)
            .filter(|(_, &k)| !k)
            .map(|(&d, _)| d)
            .sum();
        rows.push(row(
            "case3_light_edges",
            q(light as i128),
            Relation::Le,
            eps2 * dq * dq / (q(1) - eps3),
        ));
        rows
    }
}

struct Rings {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    ab: Vec<Vertex>,
    c: Vec<Vertex>,
    /// `|E(c, A∪B)|` aligned with `c`.
    to_ab: Vec<usize>,
    m: usize,
    lambda: Vec<usize>,
    inner_edges: usize,
    deficiency: usize,
}

/// `(formula, direct)` degree of edge `e` (a line-graph index) in `L(F)²`
/// for a regular `F`.
pub fn edge_square_degree_identity(f: &Multigraph, e: usize) -> Result<(usize, usize)> {
    SparsityContext::new(f).degree_identity(e)
}

pub fn sparsity_report(f: &Multigraph, e: usize, config: &Config) -> Result<SparsityReport> {
    SparsityContext::new(f).report(e, config)
}
