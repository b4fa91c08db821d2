//! JSON report envelope and number formatting.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::phi::PhiNum;
use crate::turtle::path::Path;

pub const SIG_DIGITS: usize = 12;

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIG_DIGITS - 1, x);
    let r: f64 = s.parse().unwrap();
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounds every float in a JSON tree in place.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = json!(round_sig(x));
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn to_value<T: Serialize>(t: &T) -> Value {
    let mut v = serde_json::to_value(t).expect("report values serialize");
    round_floats(&mut v);
    v
}

/// An exact φ-ring value with its decimal.
pub fn phi_value(p: PhiNum) -> Value {
    json!({ "exact": p.to_string(), "value": round_sig(p.to_f64()) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conventions {
    pub heading: &'static str,
    pub plane: &'static str,
    pub parity_base: usize,
    pub excursion_identity: &'static str,
}

impl Conventions {
    pub fn new(parity_base: usize, identify_reversal: bool) -> Conventions {
        Conventions {
            heading: "(0,-1)",
            plane: "y-up, right turn = clockwise",
            parity_base,
            excursion_identity: if identify_reversal { "sign-flip+time-reversal" } else { "sign-flip" },
        }
    }
}

/// Byte-stable report: keys are sorted, floats carry 12 significant digits.
pub fn envelope(command: &str, inputs: Value, outputs: Value, conv: &Conventions) -> Value {
    let mut v = json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "provenance": {
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "conventions": to_value(conv),
        },
    });
    round_floats(&mut v);
    v
}

pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

/// Path in the exchange schema: rule, n, vertices, exact_vertices, tokens, displacement, bbox.
pub fn path_json(p: &Path, n: Option<usize>) -> Value {
    let bb = p.bounding_box();
    let mut m = Map::new();
    m.insert("rule".into(), json!(p.rule));
    m.insert("n".into(), json!(n));
    m.insert("vertices".into(), json!(p.vertices));
    if let Some(e) = &p.exact_vertices {
        let ev: Vec<[[i64; 2]; 2]> = e.iter().map(|q| [[q[0].m, q[0].k], [q[1].m, q[1].k]]).collect();
        m.insert("exact_vertices".into(), json!(ev));
    }
    m.insert("tokens".into(), json!(p.tokens));
    m.insert("displacement".into(), json!(p.displacement()));
    m.insert("bbox".into(), json!([bb.min[0], bb.min[1], bb.max[0], bb.max[1]]));
    let mut v = Value::Object(m);
    round_floats(&mut v);
    v
}
