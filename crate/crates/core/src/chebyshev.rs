//! Chebyshev polynomials of the first kind.
//!
//! Numeric evaluation always runs the three-term recurrence
//! `T_{n+1} = 2t·T_n − T_{n−1}`. Outside `[−1, 1]` the same recurrence is
//! used unchanged; values there grow like `cosh(n·acosh|t|)`, which matters
//! for phase-shifted heights `T_c(t + φ)` near the ends of the curve.

use crate::dd::DoubleDouble;
use crate::error::{Error, Result};
use crate::exact_trig::{AngleFraction, Sign};

/// `T_n(t)`.
pub fn eval(n: u32, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, t);
    for _ in 1..n {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_0(t), …, T_n(t)`.
pub fn eval_all(n: u32, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(t);
    for k in 2..=n as usize {
        out.push(2.0 * t * out[k - 1] - out[k - 2]);
    }
    out
}

/// `T_n(t)` in double-double precision.
pub fn eval_dd(n: u32, t: DoubleDouble) -> DoubleDouble {
    if n == 0 {
        return DoubleDouble::ONE;
    }
    let two_t = t.mul_f64(2.0);
    let (mut prev, mut cur) = (DoubleDouble::ONE, t);
    for _ in 1..n {
        let next = two_t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T'_n(t) = n·U_{n−1}(t)`, with `U` from its own recurrence.
pub fn eval_derivative(n: u32, t: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let (mut prev, mut cur) = (0.0, 1.0); // U_{-1}, U_0
    for _ in 1..n {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    n as f64 * cur
}

/// `T_n(cos θ) = cos(nθ)`: returns the angle `nθ`.
pub fn eval_at_angle(n: u32, theta: &AngleFraction) -> AngleFraction {
    theta.scale(n as i64)
}

/// Sign of `T'_n(cos θ) = n·sin(nθ)/sin θ`.
///
/// Returns `Sign::Zero` at critical points of `T_n` and fails when
/// `sin θ = 0`.
pub fn derivative_sign_at_angle(n: u32, theta: &AngleFraction) -> Result<Sign> {
    let denom = theta.sign_sin();
    if denom.is_zero() {
        return Err(Error::DegenerateAngle(*theta));
    }
    if n == 0 {
        return Ok(Sign::Zero);
    }
    Ok(theta.scale(n as i64).sign_sin() * denom)
}

/// Integer coefficients of `T_n`, lowest degree first. `None` once the
/// leading coefficient `2^{n−1}` no longer fits in an `i128`.
pub fn coefficients(n: u32) -> Option<Vec<i128>> {
    let mut prev: Vec<i128> = vec![1];
    if n == 0 {
        return Some(prev);
    }
    let mut cur: Vec<i128> = vec![0, 1];
    for _ in 1..n {
        let mut next = vec![0i128; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] = c.checked_mul(2)?;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] = next[i].checked_sub(c)?;
        }
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// Human-readable polynomial, e.g. `4t^3 - 3t`.
pub fn format_polynomial(n: u32, var: &str) -> Option<String> {
    let coeffs = coefficients(n)?;
    let mut out = String::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match deg {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push_str(var);
                if deg > 1 {
                    out.push_str(&format!("^{deg}"));
                }
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> impl Iterator<Item = f64> {
        (0..1000).map(|i| -1.0 + 2.0 * i as f64 / 999.0)
    }

    #[test]
    fn base_cases() {
        assert_eq!(eval(0, 0.37), 1.0);
        assert_eq!(eval(1, 0.37), 0.37);
        for n in 0..50 {
            assert_eq!(eval(n, 1.0), 1.0);
        }
    }

    #[test]
    fn cubic_value() {
        // T_3 = 4t^3 - 3t
        assert!((eval(3, 0.5) + 1.0).abs() < 1e-15);
        assert_eq!(coefficients(3).unwrap(), vec![0, -3, 0, 4]);
    }

    #[test]
    fn agrees_with_cosine_form() {
        for n in 0..=200u32 {
            for t in grid() {
                let v = eval(n, t);
                let w = (n as f64 * t.acos()).cos();
                assert!((v - w).abs() < 1e-10, "n={n} t={t}");
                assert!(v.abs() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn composition_law() {
        for a in 1..=12u32 {
            for b in 1..=12u32 {
                for t in grid() {
                    let lhs = eval(a, eval(b, t));
                    let rhs = eval(a * b, t);
                    assert!((lhs - rhs).abs() < 1e-8, "a={a} b={b} t={t}");
                }
            }
        }
    }

    #[test]
    fn parity_is_exact() {
        for n in 0..=40u32 {
            let s = if n % 2 == 0 { 1.0 } else { -1.0 };
            for t in grid() {
                assert_eq!(eval(n, -t), s * eval(n, t), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn eval_all_matches_eval() {
        let all = eval_all(30, 0.731);
        for (n, v) in all.iter().enumerate() {
            assert_eq!(*v, eval(n as u32, 0.731));
        }
    }

    #[test]
    fn double_double_matches_f64() {
        for n in [0u32, 1, 5, 33, 120] {
            for t in [-0.93, -0.2, 0.0, 0.41, 0.999, 1.0148] {
                let a = eval(n, t);
                let b = eval_dd(n, DoubleDouble::from_f64(t)).to_f64();
                assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        for n in 1..15u32 {
            for t in [-0.9, -0.3, 0.1, 0.77] {
                let h = 1e-6;
                let fd = (eval(n, t + h) - eval(n, t - h)) / (2.0 * h);
                assert!((eval_derivative(n, t) - fd).abs() < 1e-5 * (n * n) as f64);
            }
        }
    }

    #[test]
    fn angle_evaluation() {
        assert_eq!(eval_at_angle(5, &AngleFraction::new(1, 5)), AngleFraction::new(5, 5));
        assert_eq!(eval_at_angle(5, &AngleFraction::new(1, 5)).sign_cos(), Sign::Neg);
        assert_eq!(eval_at_angle(2, &AngleFraction::new(1, 4)).sign_cos(), Sign::Zero);
        let r = eval_at_angle(10, &AngleFraction::new(1, 15));
        assert_eq!(r, AngleFraction::new(2, 3));
        assert!((r.cos() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn derivative_signs() {
        assert_eq!(
            derivative_sign_at_angle(3, &AngleFraction::new(1, 4)).unwrap(),
            Sign::Pos
        );
        assert_eq!(
            derivative_sign_at_angle(3, &AngleFraction::new(1, 3)).unwrap(),
            Sign::Zero
        );
        assert_eq!(
            derivative_sign_at_angle(8, &AngleFraction::new(5, 8)).unwrap(),
            Sign::Zero
        );
        assert!(matches!(
            derivative_sign_at_angle(3, &AngleFraction::new(1, 1)),
            Err(Error::DegenerateAngle(_))
        ));
    }

    // Roots of T'_n sit at θ = kπ/n; elsewhere the exact sign agrees with
    // the recurrence-based derivative.
    #[test]
    fn derivative_sign_matches_numeric() {
        for n in 1..=16u32 {
            for den in 1..=48i64 {
                for m in 1..den {
                    let theta = AngleFraction::new(m, den);
                    let exact = derivative_sign_at_angle(n, &theta).unwrap();
                    let numeric = eval_derivative(n, theta.cos());
                    if numeric.abs() > 1e-7 {
                        assert_eq!(exact, Sign::of_f64(numeric), "n={n} θ={theta}");
                    } else {
                        assert_eq!(exact, Sign::Zero, "n={n} θ={theta}");
                    }
                }
            }
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_polynomial(3, "t").unwrap(), "4t^3 - 3t");
        assert_eq!(format_polynomial(0, "t").unwrap(), "1");
        assert_eq!(format_polynomial(2, "t").unwrap(), "2t^2 - 1");
        assert!(coefficients(200).is_none());
    }
}
