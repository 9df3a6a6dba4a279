use std::fmt;

/// One named verdict inside a [`Report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A list of pass/fail clauses produced by the exhaustive checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a clause whose failure carries a witness description.
    pub fn check(&mut self, name: impl Into<String>, failure: Option<String>) {
        match failure {
            None => self.push(name, true, ""),
            Some(w) => self.push(name, false, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.clauses {
            self.clauses.push(Clause {
                name: format!("{prefix}{}", c.name),
                ..c
            });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.clauses {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}
