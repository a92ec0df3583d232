use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::verifier::report::{q, CheckRow, Relation, Q};

/// Constants of the sparsity argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub eps: Ratio<i64>,
    pub eps1: Ratio<i64>,
    pub eps2: Ratio<i64>,
    pub eps3: Ratio<i64>,
    /// Δ from which sparsity ratios are logged against `1 − ε`; below it
    /// they are informational.
    pub delta0: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            eps: Ratio::new(1, 36),
            eps1: Ratio::new(1, 30),
            eps2: Ratio::new(1, 9),
            eps3: Ratio::new(2, 3),
            delta0: 8,
        }
    }
}

pub(crate) fn wide(x: Ratio<i64>) -> Q {
    Q::new(*x.numer() as i128, *x.denom() as i128)
}

impl Config {
    /// `−2ε₁ + ε₁²/2 < 0` and `1 − ε₁ − ε₂/(2(1 − ε₃)) > 0`.
    pub fn feasibility_rows(&self) -> Vec<CheckRow> {
        let (e1, e2, e3) = (wide(self.eps1), wide(self.eps2), wide(self.eps3));
        let first = -q(2) * e1 + e1 * e1 / q(2);
        let mut rows = vec![CheckRow::new(
            "config",
            "case1_exponent_negative",
            first,
            Relation::Lt,
            q(0),
        )];
        if e3 != q(1) {
            let second = q(1) - e1 - e2 / (q(2) * (q(1) - e3));
            rows.push(CheckRow::new(
                "config",
                "case3_coefficient_positive",
                second,
                Relation::Gt,
                q(0),
            ));
        } else {
            rows.push(CheckRow::new("config", "eps3_below_one", e3, Relation::Lt, q(1)));
        }
        rows
    }

    pub fn validate(&self) -> Result<()> {
        let zero = Ratio::from_integer(0);
        if self.eps <= zero || self.eps > Ratio::new(3, 4) {
            return Err(Error::InvalidParameters(format!("ε = {} outside (0, 3/4]", self.eps)));
        }
        for (name, x) in [("ε₁", self.eps1), ("ε₂", self.eps2), ("ε₃", self.eps3)] {
            if x <= zero {
                return Err(Error::InvalidParameters(format!("{name} = {x} must be positive")));
            }
        }
        if let Some(row) = self.feasibility_rows().into_iter().find(|r| !r.pass()) {
            return Err(Error::InvalidParameters(format!(
                "{} fails: {}",
                row.check,
                row.csv_line()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_feasible() {
        let c = Config::default();
        assert!(c.validate().is_ok());
        let rows = c.feasibility_rows();
        assert_eq!(rows[0].lhs, Q::new(-119, 1800));
        assert_eq!(rows[1].lhs, Q::new(4, 5));
    }

    #[test]
    fn infeasible_constants_are_rejected() {
        let c = Config {
            eps2: Ratio::new(2, 1),
            ..Config::default()
        };
        assert!(c.validate().is_err());
        let c = Config {
            eps3: Ratio::from_integer(1),
            ..Config::default()
        };
        assert!(c.validate().is_err());
        let c = Config {
            eps: Ratio::new(4, 5),
            ..Config::default()
        };
        assert!(c.validate().is_err());
    }
}
