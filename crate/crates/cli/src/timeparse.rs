//! Time literals: plain decimals plus an exact `pi` shorthand
//! (`pi`, `pi/2`, `4pi/9`, `0.5pi`), and `start:stop:step` grid specs.

use std::f64::consts::PI;

/// Parse a time literal; `pi` forms evaluate as `coef * pi / den`.
pub fn parse_time(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Some(idx) = s.find("pi") {
        let (coef_str, rest) = (&s[..idx], &s[idx + 2..]);
        let coef = if coef_str.is_empty() {
            1.0
        } else if coef_str == "-" {
            -1.0
        } else {
            coef_str
                .parse::<f64>()
                .map_err(|_| format!("bad coefficient in `{s}`"))?
        };
        let den = if rest.is_empty() {
            1.0
        } else if let Some(d) = rest.strip_prefix('/') {
            let den: f64 = d.parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if den == 0.0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            den
        } else {
            return Err(format!("unexpected `{rest}` after pi in `{s}`"));
        };
        Ok(coef * PI / den)
    } else {
        s.parse::<f64>().map_err(|_| format!("bad time literal `{s}`"))
    }
}

/// A `start:stop:step` time grid (each component a time literal).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| (self.start + self.step * i as f64).min(self.stop))
            .collect()
    }
}

pub fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be start:stop:step, got `{s}`"));
    }
    let start = parse_time(parts[0])?;
    let stop = parse_time(parts[1])?;
    let step = parse_time(parts[2])?;
    if step <= 0.0 {
        return Err(format!("grid step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("grid stop {stop} is before start {start}"));
    }
    Ok(GridSpec { start, stop, step })
}
