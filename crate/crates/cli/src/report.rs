//! Serialized forms of results: JSON values, certificate CSV and text.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use so3_verlinde::certify::Certificate;
use so3_verlinde::{BivariatePolynomial, ExactRational, UnivariatePolynomial};

/// Big integers go out as JSON numbers while they fit in `u64`, as decimal
/// strings beyond that.
pub fn big(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// Rationals are always strings, `"-1/2"`, so no decimal ever appears.
pub fn rational(q: &ExactRational) -> Value {
    json!(q.to_string())
}

pub fn bivariate(poly: &BivariatePolynomial) -> Value {
    let vars = poly.vars();
    let terms: Vec<Value> = poly
        .graded_terms()
        .into_iter()
        .map(|(i, j, c)| json!({ vars.0: i, vars.1: j, "coefficient": c.to_string() }))
        .collect();
    json!({
        "variables": [vars.0, vars.1],
        "polynomial": poly.to_string(),
        "terms": terms,
    })
}

pub fn univariate(poly: &UnivariatePolynomial) -> Value {
    json!({
        "variable": poly.var(),
        "polynomial": poly.to_string(),
        "coefficients": poly.coefficients().iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "genus": c.genus,
        "lower_bound": big(&c.lower_bound),
        "valid": c.valid,
        "components": {
            "class_00": c.dim_00,
            "class_01": c.dim_01,
            "other_classes": {
                "count": big(&c.other_class_count),
                "each_at_least": c.other_each,
            },
        },
        "checks": c.checks.iter().map(|k| json!({
            "name": k.name,
            "passed": k.passed,
            "detail": k.detail,
        })).collect::<Vec<_>>(),
        "assumptions": c.assumptions,
    })
}

/// Long-format CSV: `section,name,value,detail`.
pub fn certificate_csv(c: &Certificate) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |section: &str, name: &str, value: String, detail: &str| {
        w.write_record([section, name, &value, detail]).expect("in-memory csv");
    };
    row("section", "name", "value".into(), "detail");
    row("summary", "genus", c.genus.to_string(), "");
    row("summary", "lower_bound", c.lower_bound.to_string(), "");
    row("summary", "valid", c.valid.to_string(), "");
    row("component", "class_00", c.dim_00.to_string(), "");
    row("component", "class_01", c.dim_01.to_string(), "");
    row("component", "other_classes.count", c.other_class_count.to_string(), "");
    row("component", "other_classes.each_at_least", c.other_each.to_string(), "");
    for k in &c.checks {
        row("check", &k.name, k.passed.to_string(), &k.detail);
    }
    for a in &c.assumptions {
        row("assumption", "", String::new(), a);
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

pub fn certificate_text(c: &Certificate) -> String {
    let mut out = format!(
        "genus {}: dim K >= {} ({})\n  class (0,0): {}\n  class (0,1): {}\n  other classes: {} x at least {}\n",
        c.genus,
        c.lower_bound,
        if c.valid { "valid" } else { "INVALID" },
        c.dim_00,
        c.dim_01,
        c.other_class_count,
        c.other_each,
    );
    for k in &c.checks {
        out += &format!(
            "  {} {}: {}\n",
            if k.passed { "PASS" } else { "FAIL" },
            k.name,
            k.detail
        );
    }
    for a in &c.assumptions {
        out += &format!("  assumes: {a}\n");
    }
    out
}

/// Pretty JSON with a trailing newline. Parsing it back and re-emitting
/// gives the same bytes, since key order is preserved and no floats occur.
pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
