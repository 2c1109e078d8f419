use std::io::Write;

/// Pass/fail lines for one acceptance criterion. Lines go straight to the
/// process stderr so they show up even when the test passes.
pub struct Criterion {
    kind: &'static str,
    id: u32,
    title: &'static str,
    passed: usize,
    failed: Vec<String>,
    lines: Vec<String>,
}

impl Criterion {
    pub fn new(id: u32, title: &'static str) -> Self {
        Self::labelled("ACCEPTANCE criterion", id, title)
    }

    /// Worked examples are reported separately from the numbered criteria.
    pub fn example(id: u32, title: &'static str) -> Self {
        Self::labelled("EXAMPLE", id, title)
    }

    fn labelled(kind: &'static str, id: u32, title: &'static str) -> Self {
        Self {
            kind,
            id,
            title,
            passed: 0,
            failed: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn check(&mut self, label: &str, ok: bool, detail: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        self.lines.push(format!("  [{tag}] {label}: {detail}"));
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(label.to_string());
        }
    }

    /// `measured` within `rel` relative tolerance of `target`.
    pub fn within(&mut self, label: &str, measured: f64, target: f64, rel: f64) {
        let dev = (measured - target) / target;
        self.check(
            label,
            dev.abs() <= rel,
            format!("{measured:.5e} vs {target:.5e} (deviation {:+.1}%, limit ±{:.0}%)", 100.0 * dev, 100.0 * rel),
        );
    }

    pub fn note(&mut self, text: String) {
        self.lines.push(format!("  [info] {text}"));
    }

    pub fn finish(self) {
        let verdict = match (self.passed, self.failed.len()) {
            (0, 0) => "INFO",
            (_, 0) => "PASS",
            _ => "FAIL",
        };
        let mut out = format!(
            "\n{} {:>2} {verdict}: {} ({}/{} checks)\n",
            self.kind,
            self.id,
            self.title,
            self.passed,
            self.passed + self.failed.len()
        );
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        let _ = std::io::stderr().write_all(out.as_bytes());
        assert!(
            self.failed.is_empty(),
            "{} {} failed checks: {}",
            self.kind,
            self.id,
            self.failed.join("; ")
        );
    }
}
