use serde_json::json;

/// How a reported value is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Exact computation on invariant forms.
    Computed,
    /// Exact, and equal to the manifold-level quantity by a published result.
    Theorem,
    /// Exact on invariant forms; no claim about the manifold itself.
    InvariantLevel,
    /// Immediate from the definitions.
    Elementary,
    /// Floating-point quantity, such as a residual.
    Numeric,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::Theorem => "theorem",
            Provenance::InvariantLevel => "invariant-level",
            Provenance::Elementary => "elementary",
            Provenance::Numeric => "numeric residual",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub quantity: String,
    pub value: String,
    pub provenance: Provenance,
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub title: String,
    pub entries: Vec<Entry>,
    /// Set when a consistency check failed.
    pub inconsistent: bool,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn push(
        &mut self,
        quantity: impl Into<String>,
        value: impl ToString,
        provenance: Provenance,
    ) {
        self.entries.push(Entry {
            quantity: quantity.into(),
            value: value.to_string(),
            provenance,
            certificate: None,
        });
    }

    pub fn push_cert(
        &mut self,
        quantity: impl Into<String>,
        value: impl ToString,
        provenance: Provenance,
        certificate: impl Into<String>,
    ) {
        self.entries.push(Entry {
            quantity: quantity.into(),
            value: value.to_string(),
            provenance,
            certificate: Some(certificate.into()),
        });
    }

    pub fn render_human(&self) -> String {
        let mut out = format!("{}\n", self.title);
        let width = self
            .entries
            .iter()
            .map(|e| e.quantity.chars().count())
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            let pad = width - e.quantity.chars().count();
            out.push_str(&format!(
                "  {}{}  {}  [{}]\n",
                e.quantity,
                " ".repeat(pad),
                e.value,
                e.provenance.label()
            ));
            if let Some(c) = &e.certificate {
                out.push_str(&format!("  {}  certificate: {}\n", " ".repeat(width), c));
            }
        }
        out
    }

    /// One JSON object per line.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        out.push_str(&json!({ "report": self.title }).to_string());
        out.push('\n');
        for e in &self.entries {
            let v = json!({
                "quantity": e.quantity,
                "value": e.value,
                "provenance": e.provenance.label(),
                "certificate": e.certificate,
            });
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    pub fn render(&self, machine: bool) -> String {
        if machine {
            self.render_machine()
        } else {
            self.render_human()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        r.push("b1", 2, Provenance::Theorem);
        r.push_cert("W", "dim 1", Provenance::Computed, "[x]");
        r
    }

    #[test]
    fn human_rendering_aligns_columns() {
        assert_eq!(
            sample().render(false),
            "demo\n  b1  2  [theorem]\n  W   dim 1  [computed]\n      certificate: [x]\n"
        );
    }

    #[test]
    fn machine_rendering_is_one_object_per_line() {
        let text = sample().render(true);
        let lines: Vec<serde_json::Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0]["report"], "demo");
        assert_eq!(lines[1]["quantity"], "b1");
        assert_eq!(lines[1]["certificate"], serde_json::Value::Null);
        assert_eq!(lines[2]["provenance"], "computed");
        assert_eq!(lines[2]["certificate"], "[x]");
    }
}
