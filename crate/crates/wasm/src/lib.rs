//! Browser bindings for the interactive demo page. Each export takes plain
//! numbers and returns a JSON string, so the page needs no wasm-side DOM
//! access and the functions test natively.

use wasm_bindgen::prelude::wasm_bindgen;

use isingfront::lattice::{
    lattice_dispersion, make_if_grid, mass_from_coupling, ChainSpec, IfSector,
};
use isingfront::lightfront::lf_spectrum;
use isingfront::resources::{if_resource_report, lf_resource_report, magic_sweep};

fn err_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

fn chain(n: usize, a: f64, lambda: f64) -> Result<ChainSpec, String> {
    ChainSpec::new(n, a, lambda).map_err(|e| e.to_string())
}

/// Instant-form and lightfront spectra for one (N, a, lambda) point.
///
/// JSON shape:
/// `{ "if": { "curve": [{k, omega}], "grid": [{k, omega, excitation}] },
///    "lf": { "grid": [{k_plus, energy}] | null, "mass": m | null } }`
///
/// The IF curve samples the dispersion continuously for plotting; the grids
/// carry the discrete momenta. The LF side is null for lambda > 1, where the
/// derived mass would be negative.
#[wasm_bindgen]
pub fn spectrum_json(n: usize, a: f64, lambda: f64, curve_samples: usize) -> String {
    let spec = match chain(n, a, lambda) {
        Ok(s) => s,
        Err(e) => return err_json(&e),
    };
    let samples = curve_samples.clamp(2, 4096);
    let kmax = std::f64::consts::PI / a;
    let curve: Vec<_> = (0..=samples)
        .map(|i| {
            let k = -kmax + 2.0 * kmax * i as f64 / samples as f64;
            serde_json::json!({ "k": k, "omega": lattice_dispersion(k, lambda, a) })
        })
        .collect();
    let grid = make_if_grid(&spec, IfSector::Antiperiodic);
    let if_grid: Vec<_> = grid
        .momenta()
        .iter()
        .map(|&k| {
            let w = lattice_dispersion(k, lambda, a);
            serde_json::json!({ "k": k, "omega": w, "excitation": 2.0 * w })
        })
        .collect();

    let lf = match mass_from_coupling(lambda, a) {
        Ok(mass) if !mass.is_zero() => {
            let rows: Vec<_> = lf_spectrum(&spec, mass)
                .map(|s| {
                    s.rows()
                        .iter()
                        .map(|r| serde_json::json!({ "k_plus": r.k_plus, "energy": r.energy }))
                        .collect()
                })
                .unwrap_or_default();
            serde_json::json!({ "grid": rows, "mass": mass.value() })
        }
        Ok(mass) => serde_json::json!({ "grid": [], "mass": mass.value() }),
        Err(_) => serde_json::json!({ "grid": serde_json::Value::Null, "mass": serde_json::Value::Null }),
    };

    serde_json::json!({
        "if": { "curve": curve, "grid": if_grid },
        "lf": lf,
    })
    .to_string()
}

/// Resource totals swept over lambda in [0, 1].
///
/// JSON shape: `{ "rows": [{lambda, mass, total_m2, total_entropy}],
///                "max_entropy": (N/2) ln 2 }`
#[wasm_bindgen]
pub fn sweep_json(n: usize, a: f64, steps: usize) -> String {
    let spec = match chain(n, a, 0.0) {
        Ok(s) => s,
        Err(e) => return err_json(&e),
    };
    let steps = steps.clamp(2, 1024);
    let lambdas: Vec<f64> = (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect();
    match magic_sweep(&spec, &lambdas) {
        Ok(rows) => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "lambda": r.coupling,
                        "mass": r.mass,
                        "total_m2": r.total_m2,
                        "total_entropy": r.total_entropy,
                    })
                })
                .collect();
            serde_json::json!({
                "rows": rows,
                "max_entropy": (n as f64 / 2.0) * std::f64::consts::LN_2,
            })
            .to_string()
        }
        Err(e) => err_json(&e.to_string()),
    }
}

/// Per-block entanglement and magic at one coupling, instant form against
/// lightfront.
///
/// JSON shape: `{ "mass": m, "blocks": [{k, entropy, m2}],
///                "if_totals": {entropy, m2}, "lf_totals": {entropy, m2} }`
#[wasm_bindgen]
pub fn resources_json(n: usize, a: f64, lambda: f64) -> String {
    let spec = match chain(n, a, lambda) {
        Ok(s) => s,
        Err(e) => return err_json(&e),
    };
    let mass = match mass_from_coupling(lambda, a) {
        Ok(m) => m,
        Err(e) => return err_json(&e.to_string()),
    };
    let grid = make_if_grid(&spec, IfSector::Antiperiodic);
    let report = match if_resource_report(&grid, mass) {
        Ok(r) => r,
        Err(e) => return err_json(&e.to_string()),
    };
    let lf = lf_resource_report(&spec, mass);
    let blocks: Vec<_> = report
        .per_block
        .iter()
        .map(|b| {
            serde_json::json!({
                "k": b.k,
                "entropy": b.entanglement_entropy,
                "m2": b.m2_contribution,
            })
        })
        .collect();
    serde_json::json!({
        "mass": mass.value(),
        "blocks": blocks,
        "if_totals": { "entropy": report.total_entropy, "m2": report.total_m2 },
        "lf_totals": { "entropy": lf.total_entropy, "m2": lf.total_m2 },
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_json_shape() {
        let doc: serde_json::Value =
            serde_json::from_str(&spectrum_json(8, 1.0, 0.5, 64)).unwrap();
        assert_eq!(doc["if"]["grid"].as_array().unwrap().len(), 8);
        assert_eq!(doc["if"]["curve"].as_array().unwrap().len(), 65);
        assert_eq!(doc["lf"]["grid"].as_array().unwrap().len(), 8);
        assert!((doc["lf"]["mass"].as_f64().unwrap() - 0.5).abs() < 1e-12);
        // Super-critical coupling: LF side degenerates to null.
        let doc: serde_json::Value =
            serde_json::from_str(&spectrum_json(8, 1.0, 2.0, 64)).unwrap();
        assert!(doc["lf"]["grid"].is_null());
        // Bad chain reports an error field.
        let doc: serde_json::Value = serde_json::from_str(&spectrum_json(5, 1.0, 0.5, 64)).unwrap();
        assert!(doc["error"].is_string());
    }

    #[test]
    fn sweep_json_endpoints() {
        let doc: serde_json::Value = serde_json::from_str(&sweep_json(8, 1.0, 11)).unwrap();
        let rows = doc["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 11);
        assert!(rows[0]["total_m2"].as_f64().unwrap() > 0.0);
        assert_eq!(rows[10]["total_m2"].as_f64().unwrap(), 0.0);
        let max_e = doc["max_entropy"].as_f64().unwrap();
        assert!((rows[10]["total_entropy"].as_f64().unwrap() - max_e).abs() < 1e-10);
    }

    #[test]
    fn resources_json_critical_point() {
        let doc: serde_json::Value = serde_json::from_str(&resources_json(8, 1.0, 1.0)).unwrap();
        assert_eq!(doc["if_totals"]["m2"].as_f64().unwrap(), 0.0);
        assert_eq!(doc["lf_totals"]["m2"].as_f64().unwrap(), 0.0);
        assert_eq!(doc["lf_totals"]["entropy"].as_f64().unwrap(), 0.0);
        let blocks = doc["blocks"].as_array().unwrap();
        assert_eq!(blocks.len(), 4);
        for b in blocks {
            assert!((b["entropy"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
        }
    }
}
