//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::f64::consts::PI;
use std::process::{Command, Output};

use dce_core::adiabatic_emitters::{
    eberlein_energy_by_parts_form, eberlein_energy_fifth_derivative_form, schutzhold_energy,
    RadiusTrajectory,
};
use dce_core::bogolubov::{
    adiabatic_decay_rate, alpha_sq_exact, beta_sq_exact, beta_sq_sudden, ln_beta_sq_exact,
    max_sinh_argument, regime_thresholds,
};
use dce_core::consts::{EV, HBAR};
use dce_core::eos::{air, divergence_exponent, EosModel};
use dce_core::inverse_solver::{InversionProblem, KnownIndex};
use dce_core::spectrum::{
    integrate_spectrum, number_spectrum_exact, number_spectrum_sudden, omega_max,
    photon_budget_sharp_cutoff, planck_comparison_spectrum,
};
use dce_core::{Error, MediumPair, SharpCutoff, TanhProfile};
use serde_json::Value;

const T0: f64 = 1e-15;

type Check = Result<String, String>;

fn dce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dce"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn dce_json(args: &[&str]) -> Result<Value, String> {
    let out = dce(args);
    if !out.status.success() {
        return Err(format!(
            "dce {:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn num(v: &Value, key: &str) -> Result<f64, String> {
    v[key].as_f64().ok_or_else(|| format!("missing `{key}`"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn profile(n_in: f64, n_out: f64) -> TanhProfile {
    TanhProfile::from_t0(MediumPair::new(n_in, n_out).unwrap(), T0).unwrap()
}

fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    fit_slope(
        &xs.iter().map(|x| x.ln()).collect::<Vec<_>>(),
        &ys.iter().map(|y| y.ln()).collect::<Vec<_>>(),
    )
}

fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn log_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

const PAIRS: [(f64, f64); 4] = [(1.0, 2.0), (1.3, 1.0), (1.0, 12.0), (2e4, 1.0)];

fn grid_omegas() -> Vec<f64> {
    log_points(1e-6, 1e3, 60)
        .into_iter()
        .map(|x| x / T0)
        .collect()
}

fn inversion() -> Check {
    let base = [
        "invert",
        "--photons",
        "1e6",
        "--n-liquid",
        "1.3",
        "--kr",
        "15",
    ];
    let a = dce_json(&[&base[..], &["--n-in", "1"]].concat())?;
    let n_out = a["rows"][0]["n_out"].as_f64().ok_or("no root")?;
    ensure((n_out - 12.17).abs() <= 0.05, || format!("n_out = {n_out}"))?;
    let b = dce_json(&[&base[..], &["--n-out", "1"]].concat())?;
    let n_in = b["rows"][1]["n_in"].as_f64().ok_or("no root")?;
    ensure(rel(n_in, 1.846e4) <= 5e-3, || format!("n_in = {n_in}"))?;
    let p =
        InversionProblem::new(1e6, KnownIndex::NOut(25.0), 1.3, 15.0).map_err(|e| e.to_string())?;
    let fwd = p.forward_count(71.0, 25.0);
    ensure(rel(fwd, 1e6) <= 0.02, || format!("N(71, 25) = {fwd}"))?;
    Ok(format!(
        "n_out = {n_out:.4}, n_in = {n_in:.1}, N(71,25) = {fwd:.4e}"
    ))
}

fn schwinger_counts() -> Check {
    let run = |r: &str, l: &str| {
        dce_json(&[
            "budget",
            "--n-in",
            "1",
            "--n-out",
            "1.3",
            "--radius",
            r,
            "--wavelength",
            l,
            "--n-liquid",
            "1",
        ])
    };
    let a = run("40um", "360nm")?;
    let b = run("45um", "300nm")?;
    let (na, nb, kr) = (num(&a, "n")?, num(&b, "n")?, num(&a, "kr_observed")?);
    ensure(rel(na, 1.83e6) <= 0.03, || format!("N = {na}"))?;
    ensure(rel(nb, 4.5e6) <= 0.03, || format!("N = {nb}"))?;
    ensure((kr - 698.0).abs() <= 1.0, || format!("KR = {kr}"))?;
    Ok(format!("N = {na:.4e}, {nb:.4e}; KR = {kr:.2}"))
}

fn hard_core() -> Check {
    let v = dce_json(&["eos", "hardcore"])?;
    let r = num(&v, "r_hc_um")?;
    ensure((r - 0.48).abs() <= 0.01, || format!("R_hc = {r} um"))?;
    Ok(format!("R_hc = {r:.4} um"))
}

fn normalization() -> Check {
    let mut worst: f64 = 0.0;
    for (n_in, n_out) in PAIRS {
        let p = profile(n_in, n_out);
        for w in grid_omegas() {
            let a = alpha_sq_exact(&p, w).map_err(|e| e.to_string())?;
            let b = beta_sq_exact(&p, w).map_err(|e| e.to_string())?;
            let d = ((a - b) - 1.0).abs();
            worst = worst.max(d);
            ensure(d <= 1e-12, || {
                format!(
                    "({n_in}, {n_out}) at ω t0 = {:e}: |α²-β²-1| = {d:e}",
                    w * T0
                )
            })?;
        }
    }
    Ok(format!("max |α²-β²-1| = {worst:.2e}"))
}

fn sudden_bound() -> Check {
    let mut worst: f64 = 0.0;
    for (n_in, n_out) in PAIRS {
        let p = profile(n_in, n_out);
        let s = beta_sq_sudden(&p.media());
        for w in grid_omegas() {
            let b = beta_sq_exact(&p, w).map_err(|e| e.to_string())?;
            ensure(b <= s, || {
                format!("({n_in}, {n_out}): β² = {b:e} > sudden {s:e}")
            })?;
            if max_sinh_argument(&p, w) <= 1e-3 {
                let d = rel(b, s);
                worst = worst.max(d);
                ensure(d <= 1e-5, || {
                    format!("({n_in}, {n_out}) at ω t0 = {:e}: deviation {d:e}", w * T0)
                })?;
            }
        }
    }
    Ok(format!(
        "bound holds; max small-argument deviation {worst:.2e}"
    ))
}

fn adiabatic_rate() -> Check {
    let mut notes = Vec::new();
    for (n_in, n_out) in [(1.0, 2.0), (2.0, 1.0)] {
        let p = profile(n_in, n_out);
        let th = regime_thresholds(&p).map_err(|e| e.to_string())?;
        let ws: Vec<f64> = (0..50)
            .map(|i| th.omega_adiabatic * (3.0 + 7.0 * i as f64 / 49.0))
            .collect();
        let ls: Vec<f64> = ws
            .iter()
            .map(|&w| ln_beta_sq_exact(&p, w).unwrap())
            .collect();
        let slope = fit_slope(&ws, &ls);
        let expect = -4.0 * PI * n_in.min(n_out) * n_out * T0 / (n_in * n_in + n_out * n_out);
        ensure(rel(slope, expect) <= 5e-3, || {
            format!("({n_in}, {n_out}): slope {slope:e} vs {expect:e}")
        })?;
        ensure(rel(expect, -adiabatic_decay_rate(&p)) < 1e-12, || {
            "decay rate mismatch".into()
        })?;
        notes.push(format!("{:.2e}", rel(slope, expect)));
    }
    Ok(format!("slope deviations {}", notes.join(", ")))
}

fn spectrum_shape() -> Check {
    let p = profile(1.0, 2.0);
    let ws = log_points(1e-4 / T0, 1e-3 / T0, 40);
    let ys: Vec<f64> = ws
        .iter()
        .map(|&w| number_spectrum_exact(&p, 1.0, w).unwrap())
        .collect();
    let low = loglog_slope(&ws, &ys);
    ensure((low - 2.0).abs() <= 0.02, || {
        format!("low-frequency slope {low}")
    })?;
    let pl: Vec<f64> = ws
        .iter()
        .map(|&w| planck_comparison_spectrum(&p, w, 1.0).unwrap())
        .collect();
    let planck = loglog_slope(&ws, &pl);
    ensure((planck - 1.0).abs() <= 0.02, || {
        format!("Planck slope {planck}")
    })?;

    // sharp-cutoff budgets; the second is tuned to ħ ω_max = 4 eV
    let m = MediumPair::new(1.0, 1.3).unwrap();
    let c = SharpCutoff::from_observed_wavelength(360e-9, 1.0, 1.3).unwrap();
    let b = photon_budget_sharp_cutoff(&m, 1e-14, &c).unwrap();
    let ratio = b.energy / b.n / (HBAR * b.omega_max);
    ensure((ratio - 0.75).abs() <= 0.75 * 1e-12, || {
        format!("E/(N ħω_max) = {ratio}")
    })?;
    let k = 4.0 * EV / (HBAR * dce_core::consts::C) * m.n_out();
    let c4 = SharpCutoff::from_medium(k, 1.0, m.n_out()).unwrap();
    let b4 = photon_budget_sharp_cutoff(&m, 1e-14, &c4).unwrap();
    let mean = b4.mean_energy / EV;
    ensure((mean - 3.0).abs() < 1e-9, || {
        format!("mean photon energy {mean} eV")
    })?;

    // the CLI table has a single interior peak
    let out = dce(&[
        "spectrum",
        "--n-in",
        "1",
        "--n-out",
        "2",
        "--t0",
        "1fs",
        "--omega-max",
        "1PHz",
        "--points",
        "400",
    ]);
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let dn: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    let peak = (0..dn.len())
        .max_by(|&i, &j| dn[i].total_cmp(&dn[j]))
        .unwrap();
    let rises = dn[..=peak].windows(2).all(|w| w[1] > w[0]);
    let falls = dn[peak..].windows(2).all(|w| w[1] < w[0]);
    ensure(peak > 0 && peak + 1 < dn.len() && rises && falls, || {
        format!("peak at row {peak}")
    })?;
    Ok(format!(
        "slopes {low:.4} / {planck:.4}; E/(Nħω_max) = {ratio}; <E> = {mean} eV"
    ))
}

fn quadrature_closed_form() -> Check {
    let m = MediumPair::new(1.0, 1.3).unwrap();
    let c = SharpCutoff::from_observed_wavelength(360e-9, 1.0, 1.3).unwrap();
    let v = 4.0 / 3.0 * PI * (40e-6f64).powi(3);
    let b = photon_budget_sharp_cutoff(&m, v, &c).unwrap();
    let top = omega_max(&m, &c);
    let q = integrate_spectrum(
        |w| number_spectrum_sudden(&m, v, w.max(f64::MIN_POSITIVE), Some(&c)).unwrap(),
        0.0,
        top,
        1e-12,
    )
    .map_err(|e| e.to_string())?;
    let (dn, de) = (rel(q.n, b.n), rel(q.energy, b.energy));
    ensure(dn <= 1e-9 && de <= 1e-9, || {
        format!("N off by {dn:e}, E off by {de:e}")
    })?;
    Ok(format!("N off by {dn:.1e}, E off by {de:.1e}"))
}

fn eberlein() -> Check {
    let omega = 2.0 * PI * 30e3;
    let tr = RadiusTrajectory::sinusoid(4.5e-6, 0.1, omega, 0.0).unwrap();
    let w5 = eberlein_energy_fifth_derivative_form(&tr, 1.3).unwrap();
    let wp = eberlein_energy_by_parts_form(&tr, 1.3).unwrap();
    let d = rel(w5, wp);
    ensure(d <= 1e-6, || format!("forms differ by {d:e}"))?;
    let flat = RadiusTrajectory::constant(4.5e-6, Some(2.0 * PI / omega)).unwrap();
    for (label, traj, n) in [("constant R", &flat, 1.3), ("n = 1", &tr, 1.0)] {
        for f in [
            eberlein_energy_fifth_derivative_form,
            eberlein_energy_by_parts_form,
            schutzhold_energy,
        ] {
            let w = f(traj, n).unwrap().abs();
            ensure(w <= 1e-20 * wp, || format!("{label}: W = {w:e}"))?;
        }
        let sampled = traj.sample(256).unwrap();
        let w = eberlein_energy_by_parts_form(&sampled, n).unwrap().abs();
        ensure(w <= 1e-20 * wp, || format!("{label} (sampled): W = {w:e}"))?;
    }
    let exact = schutzhold_energy(&tr, 1.3).unwrap();
    let sampled = schutzhold_energy(&tr.sample(256).unwrap(), 1.3).unwrap();
    let ds = rel(sampled, exact);
    ensure(ds <= 5e-3, || {
        format!("Schützhold schemes differ by {ds:e}")
    })?;
    Ok(format!(
        "forms differ by {d:.1e}; Schützhold schemes by {ds:.1e}"
    ))
}

fn eos_properties() -> Check {
    let t = 300.0;
    let vdw = EosModel::van_der_waals_molar(air::A_MOLAR, air::B_MOLAR, air::MOLAR_MASS).unwrap();
    let rho_max = vdw.rho_max().unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..=200 {
        let frac = 0.01 + (0.999 - 0.01) * i as f64 / 200.0;
        let a = vdw.sound_speed(frac * rho_max, t, 0.0).unwrap();
        let n = vdw.sound_speed_numeric(frac * rho_max, t, 0.0).unwrap();
        worst = worst.max(rel(n, a));
    }
    ensure(worst <= 1e-8, || format!("analytic vs numeric {worst:e}"))?;
    let die = EosModel::dieterici_molar(air::A_MOLAR, air::B_MOLAR, air::MOLAR_MASS).unwrap();
    let qv = divergence_exponent(&vdw, t).unwrap();
    let qd = divergence_exponent(&die, t).unwrap();
    ensure((qv - 1.0).abs() <= 0.02 && (qd - 1.0).abs() <= 0.02, || {
        format!("q = {qv}, {qd}")
    })?;
    let moss = EosModel::Moss {
        kappa: 0.5,
        gamma: 1.4,
        e_c: 1e4,
        rho0: 100.0,
        m: vdw.molecular_mass(),
    };
    ensure(
        matches!(divergence_exponent(&moss, t), Err(Error::NoHardCore { .. })),
        || "Moss has a hard core".into(),
    )?;
    let out = dce(&["eos", "divergence", "--model", "moss"]);
    ensure(out.status.code() == Some(3), || {
        "CLI Moss divergence did not exit 3".into()
    })?;
    let a_prime = air::A_MOLAR * 250.0;
    let ber = EosModel::berthelot_molar(a_prime, air::B_MOLAR, air::MOLAR_MASS).unwrap();
    for temp in [150.0, 250.0, 300.0, 1000.0] {
        let scaled =
            EosModel::van_der_waals_molar(a_prime / temp, air::B_MOLAR, air::MOLAR_MASS).unwrap();
        for frac in [0.1, 0.5, 0.9] {
            let (pb, pv) = (
                ber.pressure(frac * rho_max, temp).unwrap(),
                scaled.pressure(frac * rho_max, temp).unwrap(),
            );
            let ulps = (pb.to_bits() as i64 - pv.to_bits() as i64).unsigned_abs();
            ensure(ulps <= 1, || {
                format!("Berthelot vs VdW(a'/T) at T = {temp}: {ulps} ulps")
            })?;
        }
    }
    Ok(format!(
        "max analytic/numeric gap {worst:.1e}; q = {qv:.4}, {qd:.4}"
    ))
}

fn determinism() -> Check {
    let cases: [&[&str]; 5] = [
        &[
            "spectrum",
            "--n-in",
            "1",
            "--n-out",
            "2",
            "--t0",
            "1fs",
            "--omega-max",
            "30PHz",
            "--points",
            "400",
            "--planck-overlay",
        ],
        &[
            "budget",
            "--n-in",
            "1",
            "--n-out",
            "1.3",
            "--radius",
            "40um",
            "--wavelength",
            "360nm",
            "--n-liquid",
            "1",
        ],
        &[
            "invert",
            "--photons",
            "1e6",
            "--n-in",
            "1",
            "--n-liquid",
            "1.3",
            "--kr",
            "15",
        ],
        &[
            "eos",
            "sound-speed",
            "--rho-frac-min",
            "0.9",
            "--rho-frac-max",
            "0.999",
            "--points",
            "50",
        ],
        &["power", "--n", "1.3"],
    ];
    for args in cases {
        let (a, b) = (dce(args), dce(args));
        ensure(a.status.success(), || format!("{args:?} failed"))?;
        ensure(a.stdout == b.stdout, || {
            format!("{args:?} output differs between runs")
        })?;
    }
    let usage = dce(&[
        "invert",
        "--photons",
        "0",
        "--n-out",
        "1",
        "--n-liquid",
        "1.3",
        "--kr",
        "15",
    ]);
    ensure(usage.status.code() == Some(2), || {
        format!("usage exit {:?}", usage.status.code())
    })?;
    let domain = dce(&[
        "spectrum",
        "--n-in",
        "1",
        "--n-out",
        "1",
        "--t0",
        "1fs",
        "--omega-max",
        "30PHz",
    ]);
    ensure(domain.status.code() == Some(3), || {
        format!("domain exit {:?}", domain.status.code())
    })?;
    let ok = dce(&["regime", "--n-in", "1", "--n-out", "2", "--t0", "1fs"]);
    ensure(ok.status.code() == Some(0), || {
        format!("success exit {:?}", ok.status.code())
    })?;
    let err = dce(&[
        "regime",
        "--n-in",
        "1.3",
        "--n-out",
        "1.3",
        "--t0",
        "1fs",
        "--error-json",
    ]);
    let body: Value =
        serde_json::from_slice(&err.stderr).map_err(|e| format!("error JSON: {e}"))?;
    ensure(body["error"]["exit_code"] == 3, || {
        "error JSON exit code".into()
    })?;
    Ok("byte-identical reruns; exit codes 0/2/3".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("inversion regression", inversion),
        ("cavity photon counts", schwinger_counts),
        ("hard-core radius", hard_core),
        ("Bogolubov normalization", normalization),
        ("sudden bound and convergence", sudden_bound),
        ("adiabatic e-fold rate", adiabatic_rate),
        ("spectrum shape and budgets", spectrum_shape),
        ("quadrature vs closed form", quadrature_closed_form),
        ("Eberlein form equivalence", eberlein),
        ("equation-of-state properties", eos_properties),
        ("determinism and exit codes", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("PASS {:>2} {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
