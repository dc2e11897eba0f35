pub mod admissible;
pub mod averaging;
pub mod bohr;
pub mod borel;
pub mod harness;
pub mod report;
pub mod witness;

pub use admissible::{
    corpus_function, generate_admissible, phi_series, AdmissibleFunction, Generator, Provenance, Tail,
};
pub use averaging::root_of_unity_average;
pub use bohr::{
    bohr_radius_estimate, normalize_leading, verify_sharp_bohr, verify_sharp_coefficient_bound, verify_weak_bohr,
    BOHR_RADIUS, WEAK_BOHR_RADIUS,
};
pub use borel::{max_abs_real_part, verify_borel_caratheodory};
pub use harness::{run_check, Check, HarnessConfig};
pub use report::VerificationReport;
pub use witness::{sharpness_witness, SharpnessWitness};
