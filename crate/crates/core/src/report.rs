//! Line-oriented verification reports with a machine-readable trailer.

/// Accumulates one line per checked fact; the rendered text ends with a
/// single `PASS` or `FAIL` line so scripts can key off the last line.
#[derive(Clone, Debug)]
pub struct Report {
    title: String,
    lines: Vec<String>,
    passed: bool,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            lines: Vec::new(),
            passed: true,
        }
    }

    /// Record one checked fact. A failing check flips the report to FAIL.
    pub fn check(&mut self, description: impl AsRef<str>, ok: bool) -> bool {
        self.lines.push(format!(
            "{} {}",
            if ok { "ok  " } else { "FAIL" },
            description.as_ref()
        ));
        self.passed &= ok;
        ok
    }

    /// Record an informational line that does not affect the outcome.
    pub fn note(&mut self, text: impl Into<String>) {
        self.lines.push(format!("     {}", text.into()));
    }

    /// Merge a sub-report: its lines are indented under this one.
    pub fn absorb(&mut self, sub: Report) {
        self.lines.push(format!("# {}", sub.title));
        self.lines.extend(sub.lines);
        self.passed &= sub.passed;
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    /// Full text: title, lines, and the PASS/FAIL trailer.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {}\n", self.title));
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        out
    }
}
