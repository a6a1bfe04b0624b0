use alloc::vec::Vec;

/// Derivative-free minimization by the Nelder-Mead simplex method.
///
/// Stops after `max_evals` function evaluations or once the best value drops
/// to `f_target`. Returns the best point and its value.
pub fn nelder_mead<F>(mut f: F, x0: &[f64], initial_step: f64, max_evals: usize, f_target: f64) -> (Vec<f64>, f64)
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += initial_step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();
    let mut evals = n + 1;

    let centroid = |simplex: &[Vec<f64>], skip: usize| -> Vec<f64> {
        let mut c = alloc::vec![0.0; n];
        for (k, v) in simplex.iter().enumerate() {
            if k != skip {
                for (ci, vi) in c.iter_mut().zip(v) {
                    *ci += vi / n as f64;
                }
            }
        }
        c
    };
    let along =
        |c: &[f64], w: &[f64], t: f64| -> Vec<f64> { c.iter().zip(w).map(|(ci, wi)| ci + t * (wi - ci)).collect() };

    while evals < max_evals {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];
        if values[best] <= f_target {
            break;
        }

        let c = centroid(&simplex, worst);
        let reflected = along(&c, &simplex[worst], -1.0);
        let fr = f(&reflected);
        evals += 1;

        if fr < values[best] {
            let expanded = along(&c, &simplex[worst], -2.0);
            let fe = f(&expanded);
            evals += 1;
            if fe < fr {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
        } else if fr < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = fr;
        } else {
            let (target, ft) = if fr < values[worst] {
                (reflected, fr)
            } else {
                (simplex[worst].clone(), values[worst])
            };
            let contracted = along(&c, &target, 0.5);
            let fc = f(&contracted);
            evals += 1;
            if fc < ft {
                simplex[worst] = contracted;
                values[worst] = fc;
            } else {
                let anchor = simplex[best].clone();
                for k in 0..=n {
                    if k != best {
                        simplex[k] = along(&anchor, &simplex[k], 0.5);
                        values[k] = f(&simplex[k]);
                        evals += 1;
                    }
                }
            }
        }
    }

    let best = (0..=n)
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .expect("simplex is nonempty");
    (simplex[best].clone(), values[best])
}
