use recouple::exact::SurdValue;
use serde_json::{json, Value};

use crate::args::{Format, DEFAULT_DIGITS};

/// One computed value with its provenance.
#[derive(Clone, Debug)]
pub struct Record {
    pub kind: &'static str,
    pub n: i64,
    pub labels: Vec<i64>,
    pub method_used: Option<String>,
    pub predicted_terms: Option<u64>,
    pub value: SurdValue,
}

impl Record {
    pub fn json(&self) -> Value {
        json!({
            "kind": self.kind,
            "n": self.n,
            "labels": self.labels,
            "method_used": self.method_used,
            "predicted_terms": self.predicted_terms,
            "value_exact": self.value.to_string(),
            "value_decimal": self.value.to_decimal(DEFAULT_DIGITS),
        })
    }

    fn value_text(&self, format: Format) -> String {
        match format {
            Format::Decimal(k) => self.value.to_decimal(k),
            _ => self.value.to_string(),
        }
    }

    /// The bare value, for single queries.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json().to_string(),
            _ => self.value_text(format),
        }
    }

    /// Labels followed by the value, for listings.
    pub fn render_row(&self, format: Format) -> String {
        match format {
            Format::Json => self.json().to_string(),
            _ => {
                let labels: Vec<String> = self.labels.iter().map(i64::to_string).collect();
                format!("n={} {} {}", self.n, labels.join(" "), self.value_text(format))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(value: &str) -> Record {
        Record {
            kind: "sixj",
            n: 6,
            labels: vec![2; 6],
            method_used: Some("A".into()),
            predicted_terms: Some(4),
            value: value.parse().unwrap(),
        }
    }

    #[test]
    fn json_fields() {
        let v = record("-3/7*sqrt(10)").json();
        assert_eq!(v["kind"], "sixj");
        assert_eq!(v["labels"], json!([2, 2, 2, 2, 2, 2]));
        assert_eq!(v["value_exact"], "-3/7*sqrt(10)");
        assert_eq!(v["value_decimal"], "-1.35526185435787685657");
        assert_eq!(v["predicted_terms"], 4);
    }

    #[test]
    fn rows_and_values() {
        let r = record("1/2");
        assert_eq!(r.render(Format::Exact), "1/2");
        assert_eq!(r.render(Format::Decimal(3)), "0.500");
        assert_eq!(r.render_row(Format::Exact), "n=6 2 2 2 2 2 2 1/2");
    }
}
