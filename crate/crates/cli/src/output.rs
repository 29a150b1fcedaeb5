//! Rendering of command results. Every decimal string is produced once and
//! shared by the JSON, CSV and text forms.

use harmonic_bounds::bounds::{BoundPair, TableRow};
use harmonic_bounds::exact::{format_rational, Rational};
use harmonic_bounds::psi::PsiEnclosure;
use harmonic_bounds::realnum::{decimal_down, decimal_up, IntervalRepr, DEFAULT_DIGITS};
use harmonic_bounds::verify::VerifyReport;
use harmonic_bounds::Interval;
use serde_json::{json, Value};

pub const TABLE_HEADER: [&str; 12] = [
    "n",
    "residual_lo",
    "residual_hi",
    "franel_lo",
    "franel_hi",
    "tm_lo",
    "tm_hi",
    "sharp_lo_lo",
    "sharp_lo_hi",
    "sharp_hi",
    "phi_lo",
    "phi_hi",
];

#[derive(Debug, Clone, Copy)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Rendered {
    json: Value,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    text: String,
}

impl Rendered {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = self.header.join(",");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

fn repr(i: &Interval) -> IntervalRepr {
    i.repr(DEFAULT_DIGITS)
}

fn interval_json(r: &IntervalRepr) -> Value {
    json!({"lo": r.lo, "hi": r.hi, "bits": r.bits})
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn gamma(n: u64, q: u32, e: &PsiEnclosure) -> Rendered {
    let r = repr(&e.value);
    Rendered {
        json: json!({
            "gamma": {"lo": r.lo, "hi": r.hi},
            "n": n,
            "q": q,
            "method": "euler_maclaurin",
        }),
        header: strings(&["n", "q", "gamma_lo", "gamma_hi"]),
        rows: vec![vec![n.to_string(), q.to_string(), r.lo.clone(), r.hi.clone()]],
        text: format!("gamma in [{}, {}]  (n = {n}, q = {q}, euler_maclaurin)\n", r.lo, r.hi),
    }
}

pub fn phi(x: &Rational, value: &Interval) -> Rendered {
    let r = repr(value);
    let x = format_rational(x);
    Rendered {
        json: json!({"x": x, "phi": interval_json(&r)}),
        header: strings(&["x", "phi_lo", "phi_hi"]),
        rows: vec![vec![x.clone(), r.lo.clone(), r.hi.clone()]],
        text: format!("phi({x}) in [{}, {}]\n", r.lo, r.hi),
    }
}

pub fn residual(n: u64, value: &Interval) -> Rendered {
    let r = repr(value);
    Rendered {
        json: json!({"n": n, "residual": interval_json(&r)}),
        header: strings(&["n", "residual_lo", "residual_hi"]),
        rows: vec![vec![n.to_string(), r.lo.clone(), r.hi.clone()]],
        text: format!("H_{n} - ln {n} - gamma in [{}, {}]\n", r.lo, r.hi),
    }
}

fn family_name(p: &BoundPair) -> String {
    serde_json::to_value(p.family)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn bounds(n: u64, pairs: &[BoundPair]) -> Rendered {
    let mut json_pairs = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for p in pairs {
        let family = family_name(p);
        let (lo, hi) = (repr(&p.lower), repr(&p.upper));
        let exact = |r: &Option<Rational>| r.as_ref().map(format_rational);
        json_pairs.push(json!({
            "family": family,
            "lower": interval_json(&lo),
            "upper": interval_json(&hi),
            "lower_exact": exact(&p.lower_exact),
            "upper_exact": exact(&p.upper_exact),
            "lower_strict": p.lower_strict,
            "upper_strict": p.upper_strict,
        }));
        rows.push(vec![
            family.clone(),
            n.to_string(),
            lo.lo.clone(),
            lo.hi.clone(),
            hi.lo.clone(),
            hi.hi.clone(),
        ]);
        let show = |r: &IntervalRepr, e: &Option<Rational>| match e {
            Some(e) => format_rational(e),
            None => format!("[{}, {}]", r.lo, r.hi),
        };
        let rel = |strict: bool| if strict { "<" } else { "<=" };
        text.push_str(&format!(
            "{family:<9} n = {n}: {} {} residual {} {}\n",
            show(&lo, &p.lower_exact),
            rel(p.lower_strict),
            rel(p.upper_strict),
            show(&hi, &p.upper_exact),
        ));
    }
    Rendered {
        json: json!({"n": n, "bounds": json_pairs}),
        header: strings(&["family", "n", "lower_lo", "lower_hi", "upper_lo", "upper_hi"]),
        rows,
        text,
    }
}

/// Outward decimals of an exact lower and upper bound.
fn exact_pair(p: &BoundPair) -> (String, String) {
    let lo = p.lower_exact.as_ref().map_or_else(|| repr(&p.lower).lo, |r| decimal_down(r, DEFAULT_DIGITS));
    let hi = p.upper_exact.as_ref().map_or_else(|| repr(&p.upper).hi, |r| decimal_up(r, DEFAULT_DIGITS));
    (lo, hi)
}

pub fn table(rows: &[TableRow]) -> Rendered {
    let mut json_rows = Vec::new();
    let mut csv_rows = Vec::new();
    for row in rows {
        let res = repr(&row.residual);
        let (fl, fh) = exact_pair(&row.franel);
        let (tl, th) = exact_pair(&row.toth_mare);
        let sl = repr(&row.sharp.lower);
        let su = match &row.sharp.upper_exact {
            Some(u) => (decimal_down(u, DEFAULT_DIGITS), decimal_up(u, DEFAULT_DIGITS)),
            None => {
                let r = repr(&row.sharp.upper);
                (r.lo, r.hi)
            }
        };
        let ph = repr(&row.phi);
        json_rows.push(json!({
            "n": row.n,
            "residual": {"lo": res.lo, "hi": res.hi},
            "franel": [fl, fh],
            "toth_mare": [tl, th],
            "sharp": [{"lo": sl.lo, "hi": sl.hi}, {"lo": su.0, "hi": su.1}],
            "phi": {"lo": ph.lo, "hi": ph.hi},
        }));
        csv_rows.push(vec![
            row.n.to_string(),
            res.lo,
            res.hi,
            fl,
            fh,
            tl,
            th,
            sl.lo,
            sl.hi,
            su.1,
            ph.lo,
            ph.hi,
        ]);
    }
    let header = strings(&TABLE_HEADER);
    let text = aligned(&header, &csv_rows);
    Rendered {
        json: Value::Array(json_rows),
        header,
        rows: csv_rows,
        text,
    }
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|j| rows.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let mut s = padded.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

pub fn report(r: &VerifyReport) -> Rendered {
    let status = serde_json::to_value(r.status()).unwrap_or(Value::Null);
    let mut json = serde_json::to_value(r).unwrap_or(Value::Null);
    if let Value::Object(m) = &mut json {
        m.insert("status".into(), status.clone());
    }
    let status = status.as_str().unwrap_or_default().to_string();
    let mut text = format!("{}\n", r.summary());
    for (kind, list) in [("FAIL", &r.failures), ("INCONCLUSIVE", &r.inconclusive)] {
        for f in list.iter().take(20) {
            let witness: Vec<String> = f.witness.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            text.push_str(&format!("  {kind} at {}: {}  {}\n", f.at, f.relation, witness.join(", ")));
        }
    }
    Rendered {
        json,
        header: strings(&["suite", "status", "from", "to", "checked", "failures", "inconclusive", "certified"]),
        rows: vec![vec![
            r.suite.clone(),
            status,
            r.range.0.to_string(),
            r.range.1.to_string(),
            r.checked.to_string(),
            r.failures.len().to_string(),
            r.inconclusive.len().to_string(),
            r.certified.to_string(),
        ]],
        text,
    }
}
