//! Closed-form enumerative counts and degrees for hypersurfaces.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

fn exact_half(v: i128) -> i64 {
    assert!(v % 2 == 0, "odd product {v}");
    (v / 2) as i64
}

/// Degree of the dual hypersurface, `d(d-1)^{n-1}`.
pub fn dual_degree(n: u32, d: u32) -> i64 {
    d as i64 * (d as i64 - 1).pow(n - 1)
}

/// Degree of the hypersurface cutting the tangency points of bitangent
/// planes on a surface, `(d-2)(d³-d²+d-12)`.
pub fn node_couple_degree(d: u32) -> i64 {
    let d = d as i64;
    (d - 2) * (d * d * d - d * d + d - 12)
}

/// Degree of the double curve of the dual surface.
pub fn double_curve_degree(d: u32) -> i64 {
    let d = d as i128;
    exact_half(d * (d - 1) * (d - 2) * (d * d * d - d * d + d - 12))
}

/// Number of hyperplanes bitangent to a hypersurface of `P^n` and passing
/// through `n - 2` general points.
pub fn bitangent_hyperplanes(n: u32, d: u32) -> i64 {
    let (nn, d) = (n as i128, d as i128);
    let bracket = d * ((d - 1).pow(n) - 1) - 3 * (nn + 1) * (d - 2);
    exact_half(d * (d - 1).pow(n.saturating_sub(2)) * bracket)
}

/// Degree of the hypersurface cutting the parabolic locus, `(n+1)(d-2)`.
pub fn hessian_contact_degree(n: u32, d: u32) -> i64 {
    (n as i64 + 1) * (d as i64 - 2)
}

/// `λ + μ(d-2)`.
pub fn pencil_divisibility_degree(lambda: i64, mu: i64, d: u32) -> i64 {
    lambda + mu * (d as i64 - 2)
}

/// `λ'λ''μ + λλ''μ' + λλ'μ'' - λλ'λ''`.
pub fn salmon_elim_degree(l1: i64, m1: i64, l2: i64, m2: i64, l3: i64, m3: i64) -> i64 {
    l2 * l3 * m1 + l1 * l3 * m2 + l1 * l2 * m3 - l1 * l2 * l3
}

/// Degree `11d - 24` of the flecnodal curve's cutting surface, from the
/// polar multidegrees `(1,d-1), (2,d-2), (3,d-3)`.
pub fn flecnodal_degree(d: u32) -> i64 {
    let d = d as i64;
    salmon_elim_degree(1, d - 1, 2, d - 2, 3, d - 3)
}

/// Lines bitangent to a surface through a general point,
/// `½ d(d-1)(d-2)(d-3)`.
pub fn bitangent_lines_count(d: u32) -> i64 {
    let d = d as i128;
    exact_half(d * (d - 1) * (d - 2) * (d - 3))
}

/// Bidegrees `((d-2)(d-3), (d+2)(d-3))` of the bitangent-line form.
pub fn bitg_line_form_degrees(d: u32) -> (i64, i64) {
    let d = d as i64;
    ((d - 2) * (d - 3), (d + 2) * (d - 3))
}

/// One entry of the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerativeRow {
    pub quantity: String,
    pub n: Option<u32>,
    pub d: u32,
    pub value: i64,
    pub anchor: String,
    /// The formula is evaluated outside its stated range.
    pub extrapolation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerativeTable {
    pub max_degree: u32,
    pub rows: Vec<EnumerativeRow>,
}

struct Formula {
    name: &'static str,
    dims: &'static [u32],
    min_d: u32,
    anchor: &'static str,
    eval: fn(u32, u32) -> i64,
}

const FORMULAS: &[Formula] = &[
    Formula {
        name: "dual_degree",
        dims: &[2, 3],
        min_d: 2,
        anchor: "degree of the dual hypersurface",
        eval: dual_degree,
    },
    Formula {
        name: "node_couple_degree",
        dims: &[],
        min_d: 3,
        anchor: "tangency points of bitangent planes",
        eval: |_, d| node_couple_degree(d),
    },
    Formula {
        name: "double_curve_degree",
        dims: &[],
        min_d: 3,
        anchor: "double curve of the dual surface",
        eval: |_, d| double_curve_degree(d),
    },
    Formula {
        name: "bitangent_hyperplanes",
        dims: &[2, 3],
        min_d: 3,
        anchor: "bitangent hyperplanes through general points",
        eval: bitangent_hyperplanes,
    },
    Formula {
        name: "hessian_contact_degree",
        dims: &[2, 3],
        min_d: 2,
        anchor: "parabolic locus",
        eval: hessian_contact_degree,
    },
    Formula {
        name: "flecnodal_degree",
        dims: &[],
        min_d: 3,
        anchor: "flecnodal curve, polar multidegrees",
        eval: |_, d| flecnodal_degree(d),
    },
    Formula {
        name: "bitangent_lines_count",
        dims: &[],
        min_d: 3,
        anchor: "bitangent lines through a general point",
        eval: |_, d| bitangent_lines_count(d),
    },
];

impl EnumerativeTable {
    /// All formulas for `2 ≤ d ≤ max_degree`. Degrees below a formula's
    /// range are kept and flagged.
    pub fn new(max_degree: u32) -> Self {
        let mut rows = Vec::new();
        for f in FORMULAS {
            let dims: Vec<Option<u32>> = if f.dims.is_empty() {
                vec![None]
            } else {
                f.dims.iter().map(|&n| Some(n)).collect()
            };
            for n in dims {
                for d in 2..=max_degree {
                    rows.push(EnumerativeRow {
                        quantity: f.name.to_string(),
                        n,
                        d,
                        value: (f.eval)(n.unwrap_or(3), d),
                        anchor: f.anchor.to_string(),
                        extrapolation: d < f.min_d,
                    });
                }
            }
        }
        for d in 2..=max_degree {
            let (a, b) = bitg_line_form_degrees(d);
            for (suffix, v) in [("first", a), ("second", b)] {
                rows.push(EnumerativeRow {
                    quantity: format!("bitg_line_form_degree_{suffix}"),
                    n: None,
                    d,
                    value: v,
                    anchor: "bidegree of the bitangent-line form".into(),
                    extrapolation: d < 3,
                });
            }
        }
        EnumerativeTable { max_degree, rows }
    }

    /// In-range values keyed by quantity (and `n=` for dimension-dependent
    /// ones), then by degree.
    pub fn values(&self) -> Value {
        let mut out: BTreeMap<String, Value> = BTreeMap::new();
        for row in self.rows.iter().filter(|r| !r.extrapolation) {
            let slot = out
                .entry(row.quantity.clone())
                .or_insert_with(|| json!({}));
            let slot = match row.n {
                Some(n) => slot
                    .as_object_mut()
                    .expect("object")
                    .entry(format!("n={n}"))
                    .or_insert_with(|| json!({})),
                None => slot,
            };
            slot.as_object_mut()
                .expect("object")
                .insert(row.d.to_string(), json!(row.value));
        }
        serde_json::to_value(out).expect("serializable")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_degree": self.max_degree,
            "values": self.values(),
            "rows": self.rows,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| quantity | n | d | value | note |\n|---|---|---|---|---|\n");
        for r in &self.rows {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {}{} |\n",
                r.quantity,
                r.n.map_or("-".to_string(), |n| n.to_string()),
                r.d,
                r.value,
                r.anchor,
                if r.extrapolation { " (extrapolation)" } else { "" }
            ));
        }
        s
    }
}

/// A named cross-check between formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Cross-checks between formulas for `3 ≤ d ≤ max_degree`.
pub fn consistency_checks(max_degree: u32) -> Vec<ConsistencyCheck> {
    let mut out = Vec::new();
    let mut push = |name: &str, failures: Vec<String>| {
        out.push(ConsistencyCheck {
            name: name.to_string(),
            holds: failures.is_empty(),
            detail: if failures.is_empty() {
                format!("3 <= d <= {max_degree}")
            } else {
                failures.join("; ")
            },
        });
    };
    let ds = || 3..=max_degree;
    push(
        "bitangent_hyperplanes(3,d) = double_curve_degree(d)",
        ds().filter(|&d| bitangent_hyperplanes(3, d) != double_curve_degree(d))
            .map(|d| format!("d={d}"))
            .collect(),
    );
    push(
        "bitangent_hyperplanes(2,d) = d(d-2)(d-3)(d+3)/2",
        ds().filter(|&d| {
            let di = d as i64;
            bitangent_hyperplanes(2, d) * 2 != di * (di - 2) * (di - 3) * (di + 3)
        })
        .map(|d| format!("d={d}"))
        .collect(),
    );
    push(
        "node_couple_degree(d) = pencil_divisibility_degree((d-2)(d^2-6), d^3-2d^2+d-6, d)",
        ds().filter(|&d| {
            let di = d as i64;
            node_couple_degree(d)
                != pencil_divisibility_degree((di - 2) * (di * di - 6), di * di * di - 2 * di * di + di - 6, d)
        })
        .map(|d| format!("d={d}"))
        .collect(),
    );
    push(
        "hessian_contact_degree(3,d) = pencil_divisibility_degree(2(d-2), 2, d)",
        ds().filter(|&d| hessian_contact_degree(3, d) != pencil_divisibility_degree(2 * (d as i64 - 2), 2, d))
            .map(|d| format!("d={d}"))
            .collect(),
    );
    push(
        "flecnodal_degree(d) = 11d - 24",
        ds().filter(|&d| flecnodal_degree(d) != 11 * d as i64 - 24)
            .map(|d| format!("d={d}"))
            .collect(),
    );
    push(
        "d(d-1)(d-2)(d-3)/2 = bitangent_lines_count(d)",
        ds().filter(|&d| {
            let (a, _) = bitg_line_form_degrees(d);
            let di = d as i64;
            di * (di - 1) * a != 2 * bitangent_lines_count(d)
        })
        .map(|d| format!("d={d}"))
        .collect(),
    );
    out
}
