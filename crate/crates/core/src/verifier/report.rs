use std::fmt;

use num_rational::Ratio;

pub type Q = Ratio<i128>;

pub fn q(n: impl Into<i128>) -> Q {
    Q::from_integer(n.into())
}

/// Relation a row asserts between its two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        })
    }
}

/// One exact comparison `lhs REL rhs` on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub instance: String,
    pub check: String,
    pub lhs: Q,
    pub relation: Relation,
    pub rhs: Q,
}

impl CheckRow {
    pub fn new(instance: impl Into<String>, check: impl Into<String>, lhs: Q, relation: Relation, rhs: Q) -> Self {
        CheckRow {
            instance: instance.into(),
            check: check.into(),
            lhs,
            relation,
            rhs,
        }
    }

    pub fn pass(&self) -> bool {
        match self.relation {
            Relation::Lt => self.lhs < self.rhs,
            Relation::Le => self.lhs <= self.rhs,
            Relation::Eq => self.lhs == self.rhs,
            Relation::Ge => self.lhs >= self.rhs,
            Relation::Gt => self.lhs > self.rhs,
        }
    }

    /// Signed slack, non-negative for a passing inequality: `rhs − lhs` for
    /// `<`/`<=`, `lhs − rhs` otherwise.
    pub fn margin(&self) -> Q {
        match self.relation {
            Relation::Lt | Relation::Le => self.rhs - self.lhs,
            _ => self.lhs - self.rhs,
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.instance,
            self.check,
            if self.pass() { "pass" } else { "fail" },
            render(&self.lhs),
            render(&self.rhs),
            render(&self.margin())
        )
    }
}

/// `p/q` always, even for integers.
pub fn render(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub const CSV_HEADER: &str = "instance-id,check-name,pass/fail,lhs,rhs,margin";

pub fn to_csv(rows: &[CheckRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}
