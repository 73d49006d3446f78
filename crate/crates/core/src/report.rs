//! JSON report shapes. Ratios are written as exact `"num/den"` strings and
//! counts as decimal strings, so nothing is rounded through floats.

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::document::format_poset;
use crate::greedy::{BalanceReport, LinearExtension};
use crate::poset::Poset;
use crate::ratio::{fraction_string, Ratio};
use crate::theorems::WitnessPair;
use crate::verify::SuiteOutcome;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub results: Value,
}

impl Report {
    pub fn new(command: impl Into<String>, input: Value, results: Value) -> Self {
        Report {
            command: command.into(),
            input,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn poset_json(poset: &Poset) -> Value {
    json!({
        "n": poset.len(),
        "covers": poset.cover_pairs(),
        "labels": poset.labels(),
        "document": format_poset(poset),
    })
}

pub fn count_json(count: &BigUint) -> Value {
    Value::String(count.to_string())
}

pub fn ratio_json(ratio: &Ratio) -> Value {
    json!({
        "ratio": ratio.fraction(),
        "count": ratio.count().to_string(),
        "total": ratio.total().to_string(),
    })
}

pub fn balance_json(poset: &Poset, report: &BalanceReport) -> Value {
    let pairs: Vec<Value> = report
        .pairs
        .iter()
        .map(|p| {
            json!({
                "x": poset.name(p.x),
                "y": poset.name(p.y),
                "before": ratio_json(&p.ratio),
                "reverse": ratio_json(&p.ratio.complement()),
                "level": fraction_string(&p.ratio.balance()),
            })
        })
        .collect();
    json!({
        "extensions": report.kind.as_str(),
        "total": count_json(&report.total),
        "pairs": pairs,
        "best_pair": report.best_pair.map(|(x, y)| [poset.name(x), poset.name(y)]),
        "best_level": report.best_level.as_ref().map(fraction_string),
        "alpha": report.alpha.as_ref().map(fraction_string),
        "meets_alpha": report.meets_alpha,
    })
}

pub fn witness_json(poset: &Poset, witness: &WitnessPair, ratio: &Ratio) -> Value {
    json!({
        "x": poset.name(witness.x),
        "y": poset.name(witness.y),
        "trace": witness.trace.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "gp": ratio_json(ratio),
    })
}

pub fn extensions_json(poset: &Poset, extensions: &[LinearExtension]) -> Value {
    let list: Vec<Value> = extensions
        .iter()
        .map(|l| {
            json!({
                "order": l.order().iter().map(|&x| poset.name(x)).collect::<Vec<_>>(),
                "jumps": crate::greedy::jump_count(poset, l.order()),
            })
        })
        .collect();
    Value::Array(list)
}

pub fn suite_json(outcome: &SuiteOutcome) -> Value {
    serde_json::to_value(outcome).expect("suite outcomes serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{balance_report, gp_ratio};

    #[test]
    fn ratios_stay_exact() {
        let p = crate::verify::n_plus_point();
        let r = gp_ratio(&p, 1, 0).unwrap();
        assert_eq!(
            ratio_json(&r),
            json!({"ratio": "8/11", "count": "8", "total": "11"})
        );
        let report =
            balance_report(&p, Some(num_rational::BigRational::new(1.into(), 3.into()))).unwrap();
        let value = balance_json(&p, &report);
        assert_eq!(value["best_pair"], json!(["a", "e"]));
        assert_eq!(value["best_level"], json!("5/11"));
        assert_eq!(value["alpha"], json!("1/3"));
        let text = Report::new("balance", poset_json(&p), value.clone()).to_json();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["results"], value);
    }
}
