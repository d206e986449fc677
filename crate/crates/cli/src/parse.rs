use num_complex::Complex64;

/// Parses `a`, `bi`, `a+bi` or `a-bi` (no spaces; `i` alone means 1).
pub fn complex(text: &str) -> Result<Complex64, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    let Some(body) = t.strip_suffix('i') else {
        return real(t).map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not the leading sign or an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (real(&body[..k])?, body[k..].to_string()),
        None => (0.0, body.to_string()),
    };
    let im = match im.as_str() {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => real(s)?,
    };
    Ok(Complex64::new(re, im))
}

fn real(s: &str) -> Result<f64, String> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| format!("not a finite number: {s:?}"))
}

/// Comma-separated complex list.
pub fn complex_list(text: &str) -> Result<Vec<Complex64>, String> {
    text.split(',').map(complex).collect()
}
