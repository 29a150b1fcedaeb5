use std::collections::BTreeMap;

use serde::Serialize;

/// Overall outcome of a suite. Inconclusive is distinct from failure: an
/// inconclusive check could not be decided at the precision cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// 0 on pass, 1 on failure, 2 on inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }
}

/// One check that did not pass, with the values that witness it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Finding {
    /// `n` for integer sweeps, sample position otherwise. Orders findings.
    pub index: u64,
    pub at: String,
    pub relation: String,
    pub witness: BTreeMap<String, String>,
}

impl Finding {
    pub fn new(index: u64, at: impl Into<String>, relation: impl Into<String>) -> Self {
        Finding {
            index,
            at: at.into(),
            relation: relation.into(),
            witness: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub range: (u64, u64),
    pub checked: u64,
    pub failures: Vec<Finding>,
    pub inconclusive: Vec<Finding>,
    /// True when every check used exact or outward-rounded arithmetic.
    pub certified: bool,
    /// True when hardware floating point was used anywhere.
    pub uses_float: bool,
}

impl VerifyReport {
    pub fn new(suite: &str, range: (u64, u64), certified: bool) -> Self {
        VerifyReport {
            suite: suite.to_string(),
            range,
            checked: 0,
            failures: Vec::new(),
            inconclusive: Vec::new(),
            certified,
            uses_float: !certified,
        }
    }

    pub fn status(&self) -> Status {
        if !self.failures.is_empty() {
            Status::Fail
        } else if !self.inconclusive.is_empty() {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn fail(&mut self, f: Finding) {
        self.failures.push(f);
    }

    pub fn undecided(&mut self, f: Finding) {
        self.inconclusive.push(f);
    }

    /// Combines reports of the same suite over (possibly disjoint) ranges.
    /// Associative and commutative: findings are kept sorted.
    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        debug_assert_eq!(self.suite, other.suite);
        self.range = (self.range.0.min(other.range.0), self.range.1.max(other.range.1));
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.inconclusive.extend(other.inconclusive);
        self.failures.sort();
        self.inconclusive.sort();
        self.certified &= other.certified;
        self.uses_float |= other.uses_float;
        self
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        format!(
            "{}: {:?} over [{}, {}], {} checked, {} failures, {} inconclusive{}",
            self.suite,
            self.status(),
            self.range.0,
            self.range.1,
            self.checked,
            self.failures.len(),
            self.inconclusive.len(),
            if self.certified { ", certified" } else { ", sampled (not certified)" },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn report(from: u64, to: u64, fails: &[u64], undecided: &[u64]) -> VerifyReport {
        let mut r = VerifyReport::new("s", (from, to), true);
        r.checked = to - from + 1;
        for &i in fails {
            r.fail(Finding::new(i, i.to_string(), "x < y").with("x", i));
        }
        for &i in undecided {
            r.undecided(Finding::new(i, i.to_string(), "x < y"));
        }
        r
    }

    #[test]
    fn status_and_exit_codes() {
        assert_eq!(report(1, 3, &[], &[]).status().exit_code(), 0);
        assert_eq!(report(1, 3, &[2], &[3]).status().exit_code(), 1);
        assert_eq!(report(1, 3, &[], &[3]).status().exit_code(), 2);
    }

    proptest! {
        #[test]
        fn merge_is_order_independent(
            a in prop::collection::vec(0u64..100, 0..5),
            b in prop::collection::vec(0u64..100, 0..5),
            c in prop::collection::vec(0u64..100, 0..5),
        ) {
            let (ra, rb, rc) = (report(1, 10, &a, &b), report(11, 20, &b, &c), report(21, 30, &c, &a));
            let left = ra.clone().merge(rb.clone()).merge(rc.clone());
            let right = ra.clone().merge(rb.clone().merge(rc.clone()));
            let swapped = rc.merge(ra).merge(rb);
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(&left, &swapped);
        }
    }
}
