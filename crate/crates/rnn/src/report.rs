//! Machine-readable run reports and the text/CSV renderings of results.

use crate::rainbow::{FamilyCheck, RainbowRange};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub version: &'static str,
    pub command: String,
    pub input: String,
    pub budget: u64,
    pub wall_ms: u128,
    pub exact: bool,
    pub payload: Value,
}

impl RunReport {
    pub fn new(
        command: &str,
        input: &str,
        budget: u64,
        wall_ms: u128,
        exact: bool,
        payload: Value,
    ) -> RunReport {
        RunReport {
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input: input.to_string(),
            budget,
            wall_ms,
            exact,
            payload,
        }
    }
}

pub fn range_text(input: &str, n: usize, m: usize, omega: usize, r: &RainbowRange) -> String {
    let mut out = String::new();
    use std::fmt::Write;
    writeln!(out, "graph        {input}").unwrap();
    writeln!(out, "n            {n}").unwrap();
    writeln!(out, "m            {m}").unwrap();
    writeln!(out, "omega        {omega}").unwrap();
    writeln!(out, "chi          {}", r.chi).unwrap();
    writeln!(out, "r_min        {}", r.r_min).unwrap();
    writeln!(out, "r_max        {}", r.r_max).unwrap();
    match r.convention_value {
        Some(v) => writeln!(
            out,
            "convention   {v}{}",
            if r.convention_unique { "" } else { " (not unique)" }
        )
        .unwrap(),
        None => writeln!(out, "convention   ?").unwrap(),
    }
    writeln!(out, "colourings   {}", r.colourings_enumerated).unwrap();
    writeln!(out, "exact        {}", r.exact).unwrap();
    out
}

/// Aligned-column table, one row per family instance.
pub fn family_text(fc: &FamilyCheck) -> String {
    let mut rows: Vec<[String; 7]> = vec![[
        "graph".into(),
        "param".into(),
        "pred_min".into(),
        "pred_max".into(),
        "r_min".into(),
        "r_max".into(),
        "match".into(),
    ]];
    for r in &fc.rows {
        rows.push([
            r.graph.clone(),
            r.param.to_string(),
            r.predicted_min.map_or("-".into(), |v| v.to_string()),
            r.predicted_max.map_or("-".into(), |v| v.to_string()),
            r.computed_min.to_string(),
            r.computed_max.to_string(),
            if !r.exact { "inconclusive".into() } else { r.matched.to_string() },
        ]);
    }
    let mut widths = [0usize; 7];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = format!("# {}\n", fc.formula);
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn family_csv(fc: &FamilyCheck) -> String {
    let mut out = String::from("graph,param,predicted_min,predicted_max,computed_min,computed_max,exact,matched\n");
    for r in &fc.rows {
        use std::fmt::Write;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.graph,
            r.param,
            r.predicted_min.map_or(String::new(), |v| v.to_string()),
            r.predicted_max.map_or(String::new(), |v| v.to_string()),
            r.computed_min,
            r.computed_max,
            r.exact,
            r.matched
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::{verify_prop_2_5, RainbowOptions};

    #[test]
    fn family_renderings() {
        let fc = verify_prop_2_5(&[3, 4], &RainbowOptions::default());
        let text = family_text(&fc);
        assert!(text.contains("empty_sun:3"));
        let csv = family_csv(&fc);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.lines().nth(1).unwrap().ends_with("true,true"));
    }
}
