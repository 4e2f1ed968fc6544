use std::fmt::Write as _;

use azumaya_core::Check;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One decision procedure: `θ_σ`, `F`, `G`, or the closed-form criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RouteKind {
    #[serde(rename = "theta_sigma")]
    Theta,
    F,
    G,
    #[serde(rename = "criterion")]
    Criterion,
}

impl RouteKind {
    pub fn name(self) -> &'static str {
        match self {
            RouteKind::Theta => "theta_sigma",
            RouteKind::F => "F",
            RouteKind::G => "G",
            RouteKind::Criterion => "criterion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteVerdict {
    pub route: RouteKind,
    pub azumaya: bool,
    /// Exact determinant of the route's matrix.
    pub determinant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub argument: String,
    pub computed: String,
    pub expected: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub params: Value,
    pub routes: Vec<RouteVerdict>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub command: String,
    pub field: String,
    pub input: Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub routes: Vec<RouteVerdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<TableRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<SweepPoint>,
    /// Present when every route that ran agrees.
    pub azumaya: Option<bool>,
    /// False when two routes disagree anywhere in the report.
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub const EXIT_AZUMAYA: i32 = 0;
pub const EXIT_NOT_AZUMAYA: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

impl VerdictReport {
    pub fn new(command: &str, field: String, input: Value) -> Self {
        VerdictReport {
            command: command.to_string(),
            field,
            input,
            checks: Vec::new(),
            routes: Vec::new(),
            table: Vec::new(),
            points: Vec::new(),
            azumaya: None,
            consistent: true,
            timing_ms: None,
        }
    }

    /// Sets `azumaya` and `consistent` from the routes.
    pub fn settle_routes(&mut self) {
        let (azumaya, consistent) = settle(&self.routes);
        self.azumaya = azumaya;
        self.consistent = consistent;
    }

    /// 3 on any disagreement, 1 on a failed check or a negative verdict, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.consistent || self.points.iter().any(|p| !p.consistent) {
            EXIT_DISAGREEMENT
        } else if self.checks.iter().any(|c| !c.passed) || self.azumaya == Some(false) {
            EXIT_NOT_AZUMAYA
        } else {
            EXIT_AZUMAYA
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} over {}", self.command, self.field);
        if let Value::Object(map) = &self.input {
            for (k, v) in map {
                let _ = writeln!(out, "  {k} = {}", compact(v));
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.checks {
                match &c.witness {
                    None => {
                        let _ = writeln!(out, "  [pass] {}", c.name);
                    }
                    Some(w) => {
                        let _ = writeln!(out, "  [FAIL] {} ({w})", c.name);
                    }
                }
            }
        }
        if !self.table.is_empty() {
            let _ = writeln!(out, "{:<14} {:>12} {:>12}", "argument", "computed", "closed form");
            for row in &self.table {
                let flag = if row.matches { "" } else { "  MISMATCH" };
                let _ = writeln!(out, "{:<14} {:>12} {:>12}{flag}", row.argument, row.computed, row.expected);
            }
        }
        for r in &self.routes {
            let _ = writeln!(out, "{}", route_line(r));
        }
        if !self.points.is_empty() {
            let agree = self.points.iter().filter(|p| p.consistent).count();
            let yes = self
                .points
                .iter()
                .filter(|p| p.consistent && p.routes.first().is_some_and(|r| r.azumaya))
                .count();
            let _ = writeln!(
                out,
                "points: {}  routes agree: {agree}  Azumaya: {yes}",
                self.points.len()
            );
            for (k, p) in self.points.iter().enumerate().filter(|(_, p)| !p.consistent) {
                let _ = writeln!(out, "  disagreement at point {k}: {}", compact(&p.params));
                for r in &p.routes {
                    let _ = writeln!(out, "  {}", route_line(r));
                }
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        let verdict = match (self.consistent && self.points.iter().all(|p| p.consistent), self.azumaya) {
            (false, _) => "routes disagree",
            (true, Some(true)) => "Azumaya",
            (true, Some(false)) => "not Azumaya",
            (true, None) if self.checks.iter().all(|c| c.passed) => "ok",
            (true, None) => "checks failed",
        };
        let _ = writeln!(out, "verdict: {verdict}");
        out
    }
}

pub fn settle(routes: &[RouteVerdict]) -> (Option<bool>, bool) {
    let Some(first) = routes.first() else {
        return (None, true);
    };
    if routes.iter().all(|r| r.azumaya == first.azumaya) {
        (Some(first.azumaya), true)
    } else {
        (None, false)
    }
}

fn route_line(r: &RouteVerdict) -> String {
    let verdict = if r.azumaya { "Azumaya" } else { "not Azumaya" };
    format!("route {:<12} {verdict:<12} det = {}", r.route.name(), r.determinant)
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
