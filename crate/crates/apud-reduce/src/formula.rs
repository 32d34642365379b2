use crate::ReduceError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A monotone not-all-equal 3-SAT instance: `n` variables and clauses of
/// three distinct positive literals. A clause is satisfied when its three
/// values are not all equal, so satisfying assignments come in complement
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaeFormula {
    n: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeFormula {
    /// Variable indices are 0-based; each clause must name three distinct
    /// variables below `n`.
    pub fn new(n: usize, clauses: Vec<[usize; 3]>) -> Result<Self, ReduceError> {
        for (j, c) in clauses.iter().enumerate() {
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(ReduceError::Invalid(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
            for &v in c {
                if v >= n {
                    return Err(ReduceError::Invalid(format!(
                        "clause {} names variable {} but n = {}",
                        j + 1,
                        v + 1,
                        n
                    )));
                }
            }
        }
        let clauses = clauses
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(NaeFormula { n, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// True when variable `var` (0-based) appears in clause `j` (0-based).
    pub fn contains(&self, var: usize, j: usize) -> bool {
        self.clauses[j].contains(&var)
    }

    /// Parses the text form: header `p nae <n> <m>`, then `m` lines of three
    /// 1-indexed positive variable numbers. Lines starting with `c` are
    /// comments. Errors name the offending line.
    pub fn parse(text: &str) -> Result<Self, ReduceError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));
        let (hline, header) = lines.next().ok_or(ReduceError::Parse {
            line: 1,
            msg: "empty formula file".into(),
        })?;
        let mut it = header.split_whitespace();
        if it.next() != Some("p") || it.next() != Some("nae") {
            return Err(ReduceError::Parse {
                line: hline,
                msg: "expected header `p nae <n> <m>`".into(),
            });
        }
        let mut num = |what: &str| -> Result<usize, ReduceError> {
            it.next()
                .ok_or(ReduceError::Parse {
                    line: hline,
                    msg: format!("header missing {}", what),
                })?
                .parse()
                .map_err(|_| ReduceError::Parse {
                    line: hline,
                    msg: format!("invalid {} in header", what),
                })
        };
        let n = num("variable count")?;
        let m = num("clause count")?;
        let mut clauses = Vec::with_capacity(m);
        for (lno, line) in lines {
            let mut lits = Vec::new();
            for tok in line.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| ReduceError::Parse {
                    line: lno,
                    msg: format!("invalid literal `{}`", tok),
                })?;
                if v < 0 {
                    return Err(ReduceError::Parse {
                        line: lno,
                        msg: format!("negated literal {} (monotone form required)", v),
                    });
                }
                if v == 0 {
                    return Err(ReduceError::Parse {
                        line: lno,
                        msg: "literal 0 (variables are 1-indexed)".into(),
                    });
                }
                if v as usize > n {
                    return Err(ReduceError::Parse {
                        line: lno,
                        msg: format!("variable {} out of range (n = {})", v, n),
                    });
                }
                lits.push(v as usize - 1);
            }
            if lits.len() != 3 {
                return Err(ReduceError::Parse {
                    line: lno,
                    msg: format!("clause has {} literals, expected 3", lits.len()),
                });
            }
            if lits[0] == lits[1] || lits[0] == lits[2] || lits[1] == lits[2] {
                return Err(ReduceError::Parse {
                    line: lno,
                    msg: "clause repeats a variable".into(),
                });
            }
            clauses.push([lits[0], lits[1], lits[2]]);
        }
        if clauses.len() != m {
            return Err(ReduceError::Parse {
                line: 1,
                msg: format!("header declares {} clauses, found {}", m, clauses.len()),
            });
        }
        NaeFormula::new(n, clauses)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("p nae {} {}\n", self.n, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {}\n", c[0] + 1, c[1] + 1, c[2] + 1));
        }
        s
    }

    /// The three-clause formula over four variables used as the running
    /// worked example: (x1 v x3 v x4) & (x1 v x2 v x4) & (x1 v x2 v x3).
    pub fn worked_example() -> Self {
        NaeFormula::new(4, vec![[0, 2, 3], [0, 1, 3], [0, 1, 2]]).unwrap()
    }
}

impl fmt::Display for NaeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A truth assignment to all `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn complement(&self) -> Self {
        Assignment {
            values: self.values.iter().map(|b| !b).collect(),
        }
    }

    /// Index of the first clause whose literals are all equal, if any.
    pub fn violating_clause(&self, f: &NaeFormula) -> Option<usize> {
        f.clauses().iter().position(|c| {
            let v0 = self.values[c[0]];
            self.values[c[1]] == v0 && self.values[c[2]] == v0
        })
    }

    pub fn nae_satisfies(&self, f: &NaeFormula) -> bool {
        self.values.len() == f.variable_count() && self.violating_clause(f).is_none()
    }

    /// Parses `TFFT`-style or `1001`-style strings.
    pub fn parse(s: &str) -> Result<Self, ReduceError> {
        let values = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'T' | '1' => Ok(true),
                'F' | '0' => Ok(false),
                other => Err(ReduceError::Invalid(format!(
                    "bad assignment character `{}` (use T/F or 1/0)",
                    other
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Assignment { values })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.values {
            write!(f, "{}", if b { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

/// Guard for the exhaustive solver; 2^24 assignments is where "desk scale"
/// ends.
pub const BRUTE_FORCE_VARIABLE_LIMIT: usize = 24;

/// Exhaustive NAE search. Assignments are enumerated by binary encoding
/// (bit i of the counter = value of variable i), and the lowest satisfying
/// encoding wins, so the result is deterministic.
pub fn solve_nae_bruteforce(f: &NaeFormula) -> Result<Option<Assignment>, ReduceError> {
    let n = f.variable_count();
    if n > BRUTE_FORCE_VARIABLE_LIMIT {
        return Err(ReduceError::GuardExceeded {
            what: "brute-force variable count",
            limit: BRUTE_FORCE_VARIABLE_LIMIT,
            got: n,
        });
    }
    for k in 0u64..(1u64 << n) {
        let a = Assignment::new((0..n).map(|i| k >> i & 1 == 1).collect());
        if a.nae_satisfies(f) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The Fano-plane hypergraph is not 2-colorable, so as a monotone NAE
    /// instance it is unsatisfiable.
    pub(crate) fn fano() -> NaeFormula {
        NaeFormula::new(
            7,
            vec![
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn parse_single_clause() {
        let f = NaeFormula::parse("p nae 3 1\n1 2 3\n").unwrap();
        assert_eq!(f.variable_count(), 3);
        assert_eq!(f.clauses(), &[[0, 1, 2]]);
    }

    #[test]
    fn parse_worked_example() {
        let f = NaeFormula::parse("p nae 4 3\n1 3 4\n1 2 4\n1 2 3\n").unwrap();
        assert_eq!(f, NaeFormula::worked_example());
    }

    #[test]
    fn parse_errors_name_lines() {
        match NaeFormula::parse("p nae 3 1\n1 2\n") {
            Err(ReduceError::Parse { line: 2, msg }) => assert!(msg.contains("expected 3")),
            other => panic!("unexpected: {:?}", other),
        }
        match NaeFormula::parse("p nae 3 1\n1 2 -3\n") {
            Err(ReduceError::Parse { line: 2, msg }) => assert!(msg.contains("negated")),
            other => panic!("unexpected: {:?}", other),
        }
        match NaeFormula::parse("p nae 3 1\n1 2 4\n") {
            Err(ReduceError::Parse { line: 2, msg }) => assert!(msg.contains("out of range")),
            other => panic!("unexpected: {:?}", other),
        }
        assert!(matches!(
            NaeFormula::parse(""),
            Err(ReduceError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let f = NaeFormula::worked_example();
        assert_eq!(NaeFormula::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn brute_force_single_clause() {
        let f = NaeFormula::parse("p nae 3 1\n1 2 3\n").unwrap();
        let a = solve_nae_bruteforce(&f).unwrap().unwrap();
        // Lowest binary encoding: variable 0 true, the rest false.
        assert_eq!(a.values, vec![true, false, false]);
        assert!(a.nae_satisfies(&f));
    }

    #[test]
    fn brute_force_fano_is_unsat() {
        assert_eq!(solve_nae_bruteforce(&fano()).unwrap(), None);
    }

    #[test]
    fn brute_force_worked_example() {
        let f = NaeFormula::worked_example();
        let a = solve_nae_bruteforce(&f).unwrap().unwrap();
        assert!(a.nae_satisfies(&f));
        // Complement closure.
        assert!(a.complement().nae_satisfies(&f));
    }

    #[test]
    fn guard_rejects_large_n() {
        let f = NaeFormula::new(30, vec![[0, 1, 2]]).unwrap();
        assert!(matches!(
            solve_nae_bruteforce(&f),
            Err(ReduceError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn assignment_parsing_and_violations() {
        let f = NaeFormula::worked_example();
        let all_true = Assignment::parse("TTTT").unwrap();
        assert_eq!(all_true.violating_clause(&f), Some(0));
        let a = Assignment::parse("1000").unwrap();
        assert!(a.nae_satisfies(&f));
        assert!(Assignment::parse("TX").is_err());
    }
}
