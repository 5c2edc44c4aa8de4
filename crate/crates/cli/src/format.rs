//! Text rendering shared by the commands.

use std::io::{self, Write};

use bcb_core::BoundPoint;

pub const CSV_COMMENT: &str = "# asymptotic: o(1) terms dropped";

/// C-style `%.{digits}g`.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Float as printed in every CSV: 12 significant digits.
pub fn num(x: f64) -> String {
    fmt_g(x, 12)
}

/// Bound rows under the fixed header `n,lower_nats,upper_nats,gap_nats,valid`
/// (`_bits` columns when `scale` converts to bits).
pub fn write_bounds_csv<W: Write>(w: &mut W, points: &[BoundPoint], bits: bool) -> io::Result<()> {
    let unit = if bits { "bits" } else { "nats" };
    let scale = if bits {
        1.0 / std::f64::consts::LN_2
    } else {
        1.0
    };
    writeln!(w, "{CSV_COMMENT}")?;
    writeln!(w, "n,lower_{unit},upper_{unit},gap_{unit},valid")?;
    for p in points {
        writeln!(
            w,
            "{},{},{},{},{}",
            p.n,
            num(p.lower * scale),
            num(p.upper * scale),
            num(p.gap * scale),
            p.valid
        )?;
    }
    Ok(())
}
