use heunforge::apps::{doublewell_spectrum, doublewell_verify, DoubleWellInput, Parity};
use heunforge::che::{che_eigenstate, che_mu_values, che_required_sum, CheClass, CheParams};
use heunforge::heun::{heun_accessory, heun_eigenstate, HeunClass, HeunParams};
use heunforge::poly::C64;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

#[test]
fn heun_every_class_degree_two() {
    for class in HeunClass::ALL {
        let p = HeunParams::polynomial_case(class, 2, c(0.5), c(1.0 / 3.0), c(0.25), c(2.0)).unwrap();
        let qs = heun_accessory(&p, class, 2).unwrap();
        assert_eq!(qs.len(), 3, "class {}", class.roman());
        for q in qs {
            let s = heun_eigenstate(&p, class, 2, q).unwrap();
            assert_eq!(s.polynomial.degree(), Some(2));
            assert!(s.residual < 1e-8, "class {} residual {}", class.roman(), s.residual);
        }
    }
}

#[test]
fn che_every_class_degree_one() {
    for k in 1..=8 {
        let class = CheClass::new(k).unwrap();
        let base = CheParams::new(c(1.5), c(-0.4), c(1.0 / 3.0), c(0.0), c(0.0));
        let sum = che_required_sum(class, 1, &base);
        let p = CheParams::new(c(1.5), c(-0.4), c(1.0 / 3.0), c(0.0), sum);
        let mus = che_mu_values(&p, class, 1).unwrap();
        assert_eq!(mus.len(), 2, "{class}");
        for mu in mus {
            let s = che_eigenstate(&p, class, 1, mu).unwrap();
            assert!(s.residual < 1e-8, "{class} residual {}", s.residual);
        }
    }
}

#[test]
fn double_well_first_levels() {
    for parity in [Parity::Symmetric, Parity::Antisymmetric] {
        for n in 0..3 {
            let input = DoubleWellInput { n, d: 1.0, u0: 100.0, parity };
            let r = doublewell_verify(&input).unwrap();
            assert!((r.epsilon - doublewell_spectrum(&input)).abs() < 1e-12);
            assert!(r.relation < 1e-9);
            assert!(r.termination < 1e-8, "{parity:?} n={n} {}", r.termination);
        }
    }
}
