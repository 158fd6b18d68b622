from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the analysis pipeline.

    Defaults are sized for n <= 64 with unit-scale integer entries.
    """

    cluster: float = 1e-9   # relative gap below which sorted eigenvalues merge
    support: float = 1e-8   # ||E_r e_a|| above this puts theta_r in the support
    mat: float = 1e-8       # max-norm slack for projector/unitary identities
    rank: float = 1e-9      # Krylov rank cutoff relative to the largest norm
    charpoly: float = 1e-6  # scale factor for |cp(theta)| consistency
    rounding: float = 1e-6  # distance to an integer before exact certification
    periodic: float = 1e-6  # |U(tau)_aa| must exceed 1 - periodic
    pst: float = 1e-6       # PST fidelity must exceed 1 - pst
    grid: int = 4096        # fallback time samples over (0, 2*pi]

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT = Tolerances()
