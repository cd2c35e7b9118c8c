//! Law-by-law validation reports.

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// How many violating instances are kept per law; the count is always exact.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub passed: bool,
    /// Number of instances evaluated.
    pub instances: usize,
    /// Number of violating instances.
    pub failures: usize,
    /// The first few violating instances, in canonical enumeration order.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub laws: Vec<LawResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), laws: Vec::new() }
    }

    fn entry(&mut self, law: &str) -> &mut LawResult {
        if let Some(i) = self.laws.iter().position(|l| l.law == law) {
            return &mut self.laws[i];
        }
        self.laws.push(LawResult {
            law: law.to_string(),
            passed: true,
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
        });
        self.laws.last_mut().unwrap()
    }

    /// Register a law with zero instances so that it shows up even when
    /// nothing is quantified over.
    pub fn declare(&mut self, law: &str) {
        self.entry(law);
    }

    /// Record one instance of `law`. The witness closure only runs on failure.
    pub fn check(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) {
        let e = self.entry(law);
        e.instances += 1;
        if !ok {
            e.passed = false;
            e.failures += 1;
            if e.witnesses.len() < MAX_WITNESSES {
                e.witnesses.push(witness());
            }
        }
    }

    /// Compare two evaluated sides of an equation. An evaluation error
    /// (ill-typed pasting) counts as a violation and is quoted in the witness.
    pub fn check_eq<T: PartialEq>(
        &mut self,
        law: &str,
        lhs: Result<T>,
        rhs: Result<T>,
        witness: impl FnOnce() -> String,
    ) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => self.check(law, l == r, witness),
            (Err(e), _) | (_, Err(e)) => self.check(law, false, || format!("{} ({e})", witness())),
        }
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == name)
    }

    /// True if the named law was evaluated and passed.
    pub fn law_passed(&self, name: &str) -> bool {
        self.law(name).is_some_and(|l| l.passed)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.laws.iter().filter(|l| !l.passed).map(|l| l.law.as_str()).collect()
    }

    /// Append every law of `other`, prefixing its names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut l in other.laws {
            if !prefix.is_empty() {
                l.law = format!("{prefix}.{}", l.law);
            }
            match self.laws.iter_mut().find(|x| x.law == l.law) {
                Some(x) => {
                    x.passed &= l.passed;
                    x.instances += l.instances;
                    x.failures += l.failures;
                    for w in l.witnesses {
                        if x.witnesses.len() < MAX_WITNESSES {
                            x.witnesses.push(w);
                        }
                    }
                }
                None => self.laws.push(l),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn witnesses_are_capped_but_counted() {
        let mut r = Report::new("t");
        for i in 0..20 {
            r.check("law", false, || format!("#{i}"));
        }
        let l = r.law("law").unwrap();
        assert_eq!(l.failures, 20);
        assert_eq!(l.witnesses.len(), MAX_WITNESSES);
        assert_eq!(l.witnesses[0], "#0");
    }

    #[test]
    fn evaluation_errors_are_violations() {
        let mut r = Report::new("t");
        r.check_eq::<u8>("eq", Ok(1), Err(Error::Internal("x".into())), || "here".into());
        assert!(!r.passed());
        assert!(r.law("eq").unwrap().witnesses[0].contains("here"));
    }

    #[test]
    fn absorb_prefixes() {
        let mut a = Report::new("a");
        a.declare("x");
        let mut b = Report::new("b");
        b.check("y", true, String::new);
        a.absorb("b", b);
        assert!(a.law("b.y").is_some());
        assert!(a.passed());
    }
}
