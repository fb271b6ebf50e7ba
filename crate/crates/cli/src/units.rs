//! Number parsing with optional unit suffixes. Everything comes out in SI.

use std::f64::consts::PI;

use dce_core::consts::EV;

fn split(input: &str) -> (&str, &str) {
    let s = input.trim();
    // the number ends at the first character that cannot continue a float
    let mut end = 0;
    let bytes = s.as_bytes();
    while end < bytes.len() {
        let c = bytes[end] as char;
        let exp_sign =
            (c == '+' || c == '-') && end > 0 && matches!(bytes[end - 1] as char, 'e' | 'E');
        let exp = (c == 'e' || c == 'E')
            && end > 0
            && bytes
                .get(end + 1)
                .is_some_and(|n| (*n as char).is_ascii_digit() || *n == b'-' || *n == b'+');
        if c.is_ascii_digit() || c == '.' || exp || exp_sign || (end == 0 && (c == '-' || c == '+'))
        {
            end += 1;
        } else {
            break;
        }
    }
    (&s[..end], s[end..].trim())
}

fn number(text: &str) -> Result<f64, String> {
    let v: f64 = text
        .parse()
        .map_err(|_| format!("`{text}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{text}` is not finite"))
    }
}

/// Parses `text · 10^exp` as a single decimal literal.
fn shifted(text: &str, exp: i32) -> Result<f64, String> {
    let (mantissa, own) = match text.find(['e', 'E']) {
        Some(i) => (
            &text[..i],
            text[i + 1..]
                .parse::<i32>()
                .map_err(|_| format!("`{text}` is not a number"))?,
        ),
        None => (text, 0),
    };
    number(&format!("{mantissa}e{}", own + exp)).map_err(|_| format!("`{text}` is not a number"))
}

/// Each entry is `(suffix, decimal exponent, extra factor)`.
fn with_units(input: &str, what: &str, table: &[(&str, i32, f64)]) -> Result<f64, String> {
    let (num, unit) = split(input);
    number(num)?;
    table
        .iter()
        .find(|(u, _, _)| *u == unit)
        .ok_or_else(|| {
            let known: Vec<&str> = table
                .iter()
                .map(|(u, _, _)| *u)
                .filter(|u| !u.is_empty())
                .collect();
            format!(
                "unknown {what} unit `{unit}` (expected one of: {})",
                known.join(", ")
            )
        })
        .and_then(|&(_, exp, factor)| Ok(shifted(num, exp)? * factor))
}

/// Plain dimensionless number.
pub fn plain(input: &str) -> Result<f64, String> {
    number(input.trim())
}

pub fn positive(input: &str) -> Result<f64, String> {
    let v = plain(input)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("`{input}` must be positive"))
    }
}

/// Seconds; accepts fs, ps, ns, us, ms, s.
pub fn time(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "time",
        &[
            ("", 0, 1.0),
            ("s", 0, 1.0),
            ("ms", -3, 1.0),
            ("us", -6, 1.0),
            ("μs", -6, 1.0),
            ("ns", -9, 1.0),
            ("ps", -12, 1.0),
            ("fs", -15, 1.0),
        ],
    )
}

/// Metres; accepts nm, um, μm, mm, m.
pub fn length(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "length",
        &[
            ("", 0, 1.0),
            ("m", 0, 1.0),
            ("mm", -3, 1.0),
            ("um", -6, 1.0),
            ("μm", -6, 1.0),
            ("nm", -9, 1.0),
        ],
    )
}

/// Angular frequency in rad/s. Bare numbers and `rad/s` are angular;
/// Hz-family suffixes are cycles per second and get multiplied by 2π.
pub fn angular_frequency(input: &str) -> Result<f64, String> {
    let cyc = 2.0 * PI;
    with_units(
        input,
        "frequency",
        &[
            ("", 0, 1.0),
            ("rad/s", 0, 1.0),
            ("Hz", 0, cyc),
            ("kHz", 3, cyc),
            ("MHz", 6, cyc),
            ("GHz", 9, cyc),
            ("THz", 12, cyc),
            ("PHz", 15, cyc),
        ],
    )
}

/// Joules; accepts eV and J.
pub fn energy(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "energy",
        &[("", 0, 1.0), ("J", 0, 1.0), ("eV", 0, EV)],
    )
}

/// Cubic metres; accepts m3, um3.
pub fn volume(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "volume",
        &[
            ("", 0, 1.0),
            ("m3", 0, 1.0),
            ("um3", -18, 1.0),
            ("μm3", -18, 1.0),
        ],
    )
}

/// kg/m³. Bare numbers are g/cm³, the unit gas tables use.
pub fn density(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "density",
        &[("", 3, 1.0), ("g/cm3", 3, 1.0), ("kg/m3", 0, 1.0)],
    )
}

/// m³/mol. Bare numbers are l/mol.
pub fn molar_volume(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "molar volume",
        &[("", -3, 1.0), ("l/mol", -3, 1.0), ("m3/mol", 0, 1.0)],
    )
}

/// kg/mol. Bare numbers are g/mol.
pub fn molar_mass(input: &str) -> Result<f64, String> {
    with_units(
        input,
        "molar mass",
        &[("", -3, 1.0), ("g/mol", -3, 1.0), ("kg/mol", 0, 1.0)],
    )
}

macro_rules! positive_of {
    ($name:ident, $inner:ident) => {
        pub fn $name(input: &str) -> Result<f64, String> {
            let v = $inner(input)?;
            if v > 0.0 {
                Ok(v)
            } else {
                Err(format!("`{input}` must be positive"))
            }
        }
    };
}

positive_of!(positive_time, time);
positive_of!(positive_length, length);
positive_of!(positive_angular_frequency, angular_frequency);
positive_of!(positive_volume, volume);
positive_of!(positive_density, density);
positive_of!(positive_molar_volume, molar_volume);
positive_of!(positive_molar_mass, molar_mass);
