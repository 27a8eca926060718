//! Closed forms for `γ_t`, `τ` and `TDV` on paths, cycles and complete
//! multipartite graphs. All arithmetic is exact integer arithmetic.

use crate::error::{invalid, Result};

fn at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(invalid(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn gamma_t_by_residue(n: usize) -> usize {
    if n.is_multiple_of(4) {
        n / 2
    } else {
        n / 2 + 1
    }
}

pub fn gamma_t_cycle(n: usize) -> Result<usize> {
    at_least(n, 3, "cycle")?;
    Ok(gamma_t_by_residue(n))
}

/// Same values as the cycle of equal order, but defined from `n = 2`.
pub fn gamma_t_path(n: usize) -> Result<usize> {
    at_least(n, 2, "path")?;
    Ok(gamma_t_by_residue(n))
}

pub fn tau_cycle(n: usize) -> Result<u64> {
    at_least(n, 3, "cycle")?;
    let n = n as u64;
    Ok(match n % 4 {
        0 => 4,
        1 | 3 => n,
        _ => (n / 2) * (n / 2),
    })
}

/// `TDV` of any vertex of `C_n`; it is the same for every vertex.
pub fn tdv_cycle(n: usize) -> Result<u64> {
    at_least(n, 3, "cycle")?;
    let n = n as u64;
    Ok(match n % 4 {
        0 => 2,
        1 | 3 => n / 2 + 1,
        // n = 4k + 2, so (n + 2) / 4 is exact
        _ => (n / 2) * ((n + 2) / 4),
    })
}

pub fn tau_path(n: usize) -> Result<u64> {
    at_least(n, 2, "path")?;
    let k = (n / 4) as u64;
    Ok(match n % 4 {
        0 => 1,
        1 => k,
        2 => (k + 1) * (k + 1),
        _ => k + 2,
    })
}

/// `TDV(v)` on `P_n`, dispatched on `n mod 4` and on `v = 4q + r`.
pub fn tdv_path(n: usize, v: usize) -> Result<u64> {
    at_least(n, 2, "path")?;
    if !(1..=n).contains(&v) {
        return Err(invalid(format!("vertex {v} not in 1..={n}")));
    }
    let k = (n / 4) as u64;
    let (q, r) = ((v / 4) as u64, v % 4);
    Ok(match (n % 4, r) {
        (0, 0 | 1) => 0,
        (0, _) => 1,

        (1, 0) => q,
        (1, 1) => 0,
        (1, 2) => k - q,
        (1, _) => k,

        (2, 0) => (k + 1) * q,
        (2, 1) => (k + 1) * (q + 1),
        (2, 2) => (k + 1) * (k + 1 - q),
        (2, _) => (k + 1) * (k - q),

        (_, 0) => 0,
        (_, 1) => q + 1,
        (_, 2) => k + 2,
        (_, _) => k + 1 - q,
    })
}

fn check_parts(parts: &[usize]) -> Result<()> {
    if parts.len() < 2 {
        return Err(invalid(
            "a complete multipartite graph needs at least 2 parts",
        ));
    }
    if parts.contains(&0) {
        return Err(invalid("every part needs at least one vertex"));
    }
    Ok(())
}

/// `τ = ((Σ aᵢ)² − Σ aᵢ²) / 2`; reduces to `C(n, 2)` for `K_n` and `a₁·a₂`
/// for `K_{a₁,a₂}`.
pub fn multipartite_tau(parts: &[usize]) -> Result<u64> {
    check_parts(parts)?;
    let total: u64 = parts.iter().map(|&a| a as u64).sum();
    let squares: u64 = parts.iter().map(|&a| (a as u64) * (a as u64)).sum();
    Ok((total * total - squares) / 2)
}

/// `TDV(v) = (Σ aᵢ) − a_j` for `v` in part `j` (1-based).
pub fn multipartite_tdv(parts: &[usize], part: usize) -> Result<u64> {
    check_parts(parts)?;
    if !(1..=parts.len()).contains(&part) {
        return Err(invalid(format!("part {part} not in 1..={}", parts.len())));
    }
    let total: usize = parts.iter().sum();
    Ok((total - parts[part - 1]) as u64)
}

/// `(TDV in mK₂, TDV in its complement)` for every vertex; they sum to `2m − 1`.
pub fn mk2_complement_tdv(m: usize) -> Result<(u64, u64)> {
    if m < 2 {
        return Err(invalid(format!("mK2 complement needs m >= 2, got {m}")));
    }
    Ok((1, 2 * m as u64 - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_t_values() {
        assert_eq!(gamma_t_cycle(4).unwrap(), 2);
        assert_eq!(gamma_t_path(6).unwrap(), 4);
        assert_eq!(gamma_t_cycle(12).unwrap(), 6);
        assert!(gamma_t_cycle(2).is_err());
        assert!(gamma_t_path(1).is_err());
    }

    #[test]
    fn cycle_values() {
        assert_eq!(tau_cycle(4).unwrap(), 4);
        assert_eq!(tau_cycle(5).unwrap(), 5);
        assert_eq!(tau_cycle(10).unwrap(), 25);
        assert_eq!(tdv_cycle(4).unwrap(), 2);
        assert_eq!(tdv_cycle(5).unwrap(), 3);
        assert_eq!(tdv_cycle(6).unwrap(), 6);
        assert!(tau_cycle(2).is_err());
        assert!(tdv_cycle(0).is_err());
    }

    #[test]
    fn path_values() {
        assert_eq!(tau_path(4).unwrap(), 1);
        assert_eq!(tau_path(6).unwrap(), 4);
        assert_eq!(tau_path(7).unwrap(), 3);
        assert_eq!(tau_path(2).unwrap(), 1);
        assert_eq!(tau_path(3).unwrap(), 2);
        assert_eq!(tdv_path(6, 2).unwrap(), 4);
        assert_eq!(tdv_path(4, 1).unwrap(), 0);
        let p9: Vec<u64> = (1..=9).map(|v| tdv_path(9, v).unwrap()).collect();
        assert_eq!(p9, vec![0, 2, 2, 1, 0, 1, 2, 2, 0]);
        assert_eq!(
            (1..=2).map(|v| tdv_path(2, v).unwrap()).collect::<Vec<_>>(),
            vec![1, 1]
        );
        assert_eq!(
            (1..=3).map(|v| tdv_path(3, v).unwrap()).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
        assert!(tdv_path(6, 0).is_err());
        assert!(tdv_path(6, 7).is_err());
    }

    #[test]
    fn multipartite_values() {
        assert_eq!(multipartite_tau(&[1, 1, 1, 1, 1]).unwrap(), 10);
        assert_eq!(multipartite_tdv(&[1, 1, 1, 1, 1], 3).unwrap(), 4);
        assert_eq!(multipartite_tau(&[2, 3]).unwrap(), 6);
        assert_eq!(multipartite_tdv(&[2, 3], 1).unwrap(), 3);
        assert_eq!(multipartite_tdv(&[2, 3], 2).unwrap(), 2);
        assert!(multipartite_tau(&[4]).is_err());
        assert!(multipartite_tau(&[2, 0]).is_err());
        assert!(multipartite_tdv(&[2, 3], 3).is_err());
        assert!(multipartite_tdv(&[2, 3], 0).is_err());
    }

    #[test]
    fn mk2_complement_values() {
        assert_eq!(mk2_complement_tdv(2).unwrap(), (1, 2));
        assert_eq!(mk2_complement_tdv(3).unwrap(), (1, 4));
        assert!(mk2_complement_tdv(1).is_err());
    }

    #[test]
    fn path_symmetry_and_sum_identity() {
        for n in 2..=200 {
            let tdv: Vec<u64> = (1..=n).map(|v| tdv_path(n, v).unwrap()).collect();
            for v in 1..=n {
                assert_eq!(tdv[v - 1], tdv[n - v], "P_{n} at {v}");
            }
            let t = tau_path(n).unwrap();
            assert!(tdv.iter().all(|&x| x <= t));
            assert_eq!(tdv.iter().sum::<u64>(), t * gamma_t_path(n).unwrap() as u64);
        }
    }

    #[test]
    fn cycle_sum_identity_and_path_below_cycle() {
        for n in 3..=200 {
            let t = tau_cycle(n).unwrap();
            assert_eq!(
                n as u64 * tdv_cycle(n).unwrap(),
                t * gamma_t_cycle(n).unwrap() as u64
            );
            assert!(tau_path(n).unwrap() <= t);
        }
    }

    #[test]
    fn multipartite_sum_identity() {
        for parts in [vec![1, 2], vec![3, 3, 1], vec![5, 1, 1, 2], vec![2; 6]] {
            let total: u64 = parts
                .iter()
                .enumerate()
                .map(|(j, &a)| a as u64 * multipartite_tdv(&parts, j + 1).unwrap())
                .sum();
            assert_eq!(total, 2 * multipartite_tau(&parts).unwrap());
        }
    }
}
