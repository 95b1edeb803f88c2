//! Deterministic command reports.
//!
//! A report echoes the command and its options, carries a SHA-256 of the
//! input document, the results, and a `payload_sha256` over everything
//! except the timing field — so identical runs produce identical payload
//! hashes even though wall-clock timing varies.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub options: BTreeMap<String, String>,
    pub input_sha256: String,
    pub warnings: Vec<String>,
    pub results: Results,
    pub payload_sha256: String,
    pub timing_secs: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Minimize {
        mode: String,
        kernel: String,
        generators: Vec<String>,
        degrees: Vec<u32>,
        betti: BTreeMap<u32, usize>,
        total: usize,
    },
    Betti {
        up_to: u32,
        betti: BTreeMap<u32, usize>,
        total: usize,
    },
    Hilbert {
        up_to: u32,
        values: BTreeMap<u32, usize>,
    },
    Resolve {
        presentation: Vec<String>,
        step_degrees: Vec<Vec<u32>>,
        matrices: Vec<Vec<Vec<String>>>,
        length: usize,
        truncation_degree: u32,
        certified: bool,
        certification: String,
        fredholm_index: Option<i64>,
    },
    Koszul {
        scan_bound: u32,
        table: Vec<BTreeMap<u32, usize>>,
        totals: Vec<usize>,
        euler_index: i64,
    },
    Verify {
        orthogonality_ok: bool,
        products_checked: usize,
        certified: bool,
        minimality_ok: bool,
        exactness_ok: bool,
        koszul_ok: Option<bool>,
        details: Vec<String>,
    },
}

pub fn sha256_hex(data: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    /// Assemble a report, filling in the payload hash over everything except
    /// the timing.
    pub fn new(
        command: String,
        options: BTreeMap<String, String>,
        input_sha256: String,
        warnings: Vec<String>,
        results: Results,
        timing_secs: f64,
    ) -> Self {
        let mut report = Report {
            command,
            options,
            input_sha256,
            warnings,
            results,
            payload_sha256: String::new(),
            timing_secs: 0.0,
        };
        let payload = serde_json::to_string(&report).expect("report serializes");
        report.payload_sha256 = sha256_hex(&payload);
        report.timing_secs = timing_secs;
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        for (k, v) in &self.options {
            line(format!("  {k}: {v}"));
        }
        for w in &self.warnings {
            line(format!("warning: {w}"));
        }
        match &self.results {
            Results::Minimize {
                mode,
                kernel,
                generators,
                degrees,
                betti,
                total,
            } => {
                line(format!("mode: {mode}, kernel: {kernel}"));
                line(format!("minimal generators ({total}):"));
                for (g, d) in generators.iter().zip(degrees) {
                    line(format!("  [degree {d}] {g}"));
                }
                line(format!("betti row: {}", format_counts(betti)));
            }
            Results::Betti { up_to, betti, total } => {
                line(format!("betti row (degrees 0..={up_to}): {}", format_counts(betti)));
                line(format!("total minimal generators: {total}"));
            }
            Results::Hilbert { up_to, values } => {
                line(format!("hilbert function (degrees 0..={up_to}):"));
                for (k, v) in values {
                    line(format!("  h({k}) = {v}"));
                }
            }
            Results::Resolve {
                presentation,
                step_degrees,
                matrices,
                length,
                truncation_degree,
                certified,
                certification,
                fredholm_index,
            } => {
                line(format!(
                    "resolution length {length}, scanned to degree {truncation_degree}"
                ));
                line(format!("certification: {certification}"));
                line(format!("certified: {certified}"));
                line("presentation (minimal generators):".to_string());
                for g in presentation {
                    line(format!("  {g}"));
                }
                for (p, degrees) in step_degrees.iter().enumerate() {
                    line(format!("step {p} degrees: {degrees:?}"));
                    if p >= 1 {
                        let m = &matrices[p - 1];
                        for row in m {
                            line(format!("    [{}]", row.join(", ")));
                        }
                    }
                }
                if let Some(index) = fredholm_index {
                    line(format!("fredholm index: {index}"));
                }
            }
            Results::Koszul {
                scan_bound,
                table,
                totals,
                euler_index,
            } => {
                line(format!("koszul homology (scanned to degree {scan_bound}):"));
                for (p, row) in table.iter().enumerate() {
                    line(format!(
                        "  H_{p}: {} (total {})",
                        format_counts(row),
                        totals[p]
                    ));
                }
                line(format!("euler index: {euler_index}"));
            }
            Results::Verify {
                orthogonality_ok,
                products_checked,
                certified,
                minimality_ok,
                exactness_ok,
                koszul_ok,
                details,
            } => {
                line(format!(
                    "orthogonality: {} ({products_checked} products checked)",
                    pass(*orthogonality_ok)
                ));
                line(format!("minimality: {}", pass(*minimality_ok)));
                line(format!("exactness: {}", pass(*exactness_ok)));
                line(format!("certified resolution: {certified}"));
                match koszul_ok {
                    Some(ok) => line(format!("koszul cross-check: {}", pass(*ok))),
                    None => line("koszul cross-check: skipped (not certified)".to_string()),
                }
                for d in details {
                    line(format!("  {d}"));
                }
            }
        }
        line(format!("input sha256: {}", self.input_sha256));
        line(format!("payload sha256: {}", self.payload_sha256));
        line(format!("timing: {:.3}s", self.timing_secs));
        out
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn format_counts(counts: &BTreeMap<u32, usize>) -> String {
    let inner: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", inner.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "betti".into(),
            BTreeMap::from([("up-to".into(), "4".into())]),
            sha256_hex("input"),
            vec![],
            Results::Betti {
                up_to: 4,
                betti: BTreeMap::from([(2, 3)]),
                total: 3,
            },
            0.25,
        )
    }

    #[test]
    fn payload_hash_ignores_timing() {
        let a = sample();
        let mut b = sample();
        b.timing_secs = 99.0;
        assert_eq!(a.payload_sha256, b.payload_sha256);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let a = sample();
        let json = serde_json::to_string(&a).unwrap();
        let b: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(a, b);
        assert_eq!(json, serde_json::to_string(&b).unwrap());
    }
}
