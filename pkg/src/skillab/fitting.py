"""Saturating-capacity law: evaluation, interference, and curve fitting.

The accuracy model is alpha / (1 + (n / kappa) ** gamma) minus an optional
epsilon * interference penalty. Fitting runs a bounded nonlinear least
squares from a grid of starting points and keeps the best solution, flagging
fits that ran into a parameter bound as unconverged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import least_squares

from . import similarity
from .errors import DomainError, InsufficientPoints, TooSmall, ZeroVariance
from .types import SCHEMA_VERSION, SkillLibrary

ALPHA_BOUNDS = (0.5, 1.2)
KAPPA_BOUNDS = (5.0, 500.0)
GAMMA_BOUNDS = (0.5, 3.0)
EPSILON_BOUNDS = (0.0, 1.0)

ALPHA_STARTS = (0.6, 0.9, 1.1)
KAPPA_STARTS = (10.0, 50.0, 90.0, 200.0, 400.0)
GAMMA_STARTS = (0.7, 1.2, 1.7, 2.4)
EPSILON_STARTS = (0.01, 0.2)

MIN_POINTS = 4
_BOUND_ATOL = 1e-6


def eval_law(alpha: float, kappa: float, gamma: float, n: float) -> float:
    """Accuracy the law predicts for a library of n candidates; n=0 gives alpha."""
    if kappa <= 0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    if n < 0:
        raise DomainError(f"candidate count must be non-negative, got {n}")
    return alpha / (1.0 + (n / kappa) ** gamma)


def interference_index(library: SkillLibrary) -> float:
    """Mean pairwise descriptor similarity across a library."""
    if len(library) < 2:
        raise TooSmall(
            f"interference needs at least 2 skills, library has {len(library)}"
        )
    return similarity.mean_pairwise([s.descriptor for s in library])


@dataclass(frozen=True)
class FitResult:
    """Fitted law parameters plus goodness-of-fit diagnostics.

    converged is False when the optimizer failed or the best solution sits
    on a parameter bound, which usually means the data does not constrain
    that parameter. residuals are predicted minus observed, in input order;
    bounds records the box the fit ran under as (name, low, high) triples.
    """

    alpha: float
    kappa: float
    gamma: float
    epsilon: float
    rmse: float
    r_squared: float
    converged: bool
    n_points: int
    residuals: tuple[float, ...] = ()
    bounds: tuple[tuple[str, float, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "alpha": self.alpha,
            "kappa": self.kappa,
            "gamma": self.gamma,
            "epsilon": self.epsilon,
            "rmse": self.rmse,
            "r_squared": self.r_squared,
            "converged": self.converged,
            "n_points": self.n_points,
            "residuals": list(self.residuals),
            "bounds": {name: [low, high] for name, low, high in self.bounds},
        }

    def predict(self, n: float, interference: float = 0.0) -> float:
        return eval_law(self.alpha, self.kappa, self.gamma, n) - (
            self.epsilon * interference
        )


def _check_points(points: Sequence[tuple[float, float]]):
    pts = [(float(n), float(a)) for n, a in points]
    for n, a in pts:
        if n <= 0:
            raise DomainError(f"candidate count must be positive, got {n}")
        if not 0.0 <= a <= 1.0:
            raise DomainError(f"accuracy must be in [0, 1], got {a}")
    return pts


def _near(value: float, bound: float) -> bool:
    return abs(value - bound) <= _BOUND_ATOL * max(1.0, abs(bound))


def fit_law(
    points: Sequence[tuple[float, float]],
    interference: Sequence[float] | None = None,
) -> FitResult:
    """Fit the law to (candidate count, accuracy) points.

    With interference given (one value per point), an epsilon * interference
    term is fitted as well; otherwise epsilon is pinned to zero. Runs every
    combination of grid starts and returns the solution with the lowest
    root-mean-square error, breaking ties on parameter values.
    """
    pts = _check_points(points)
    if len(pts) < MIN_POINTS:
        raise InsufficientPoints(
            f"fitting needs at least {MIN_POINTS} points, got {len(pts)}"
        )
    n_arr = np.array([p[0] for p in pts])
    acc = np.array([p[1] for p in pts])

    with_eps = interference is not None
    if with_eps:
        i_arr = np.array([float(x) for x in interference])
        if len(i_arr) != len(pts):
            raise DomainError(
                f"interference has {len(i_arr)} values for {len(pts)} points"
            )
        if np.any(i_arr < 0.0) or np.any(i_arr > 1.0):
            raise DomainError("interference values must be in [0, 1]")
        lower = [ALPHA_BOUNDS[0], KAPPA_BOUNDS[0], GAMMA_BOUNDS[0], EPSILON_BOUNDS[0]]
        upper = [ALPHA_BOUNDS[1], KAPPA_BOUNDS[1], GAMMA_BOUNDS[1], EPSILON_BOUNDS[1]]
    else:
        lower = [ALPHA_BOUNDS[0], KAPPA_BOUNDS[0], GAMMA_BOUNDS[0]]
        upper = [ALPHA_BOUNDS[1], KAPPA_BOUNDS[1], GAMMA_BOUNDS[1]]

    def residual(vec):
        pred = vec[0] / (1.0 + (n_arr / vec[1]) ** vec[2])
        if with_eps:
            pred = pred - vec[3] * i_arr
        return pred - acc

    eps_starts = EPSILON_STARTS if with_eps else (None,)
    best_key = None
    best_x = None
    best_success = False
    for a0 in ALPHA_STARTS:
        for k0 in KAPPA_STARTS:
            for g0 in GAMMA_STARTS:
                for e0 in eps_starts:
                    x0 = [a0, k0, g0] if e0 is None else [a0, k0, g0, e0]
                    result = least_squares(
                        residual, x0, bounds=(lower, upper), method="trf"
                    )
                    rmse = float(np.sqrt(np.mean(result.fun**2)))
                    key = (rmse, *(float(v) for v in result.x))
                    if best_key is None or key < best_key:
                        best_key = key
                        best_x = [float(v) for v in result.x]
                        best_success = bool(result.success)

    alpha, kappa, gamma = best_x[:3]
    epsilon = best_x[3] if with_eps else 0.0
    at_bound = (
        _near(alpha, ALPHA_BOUNDS[0])
        or _near(alpha, ALPHA_BOUNDS[1])
        or _near(kappa, KAPPA_BOUNDS[0])
        or _near(kappa, KAPPA_BOUNDS[1])
        or _near(gamma, GAMMA_BOUNDS[0])
        or _near(gamma, GAMMA_BOUNDS[1])
    )
    if with_eps:
        at_bound = at_bound or _near(epsilon, EPSILON_BOUNDS[1])

    rmse = best_key[0]
    pred = np.array([eval_law(alpha, kappa, gamma, n) for n in n_arr])
    if with_eps:
        pred = pred - epsilon * i_arr
    ss_res = float(np.sum((acc - pred) ** 2))
    ss_tot = float(np.sum((acc - acc.mean()) ** 2))
    if ss_tot > 0.0:
        r_squared = 1.0 - ss_res / ss_tot
    else:
        # Constant accuracies leave R^2 undefined; report a perfect score
        # only for a perfect fit.
        r_squared = 1.0 if ss_res == 0.0 else 0.0

    bounds = [
        ("alpha", *ALPHA_BOUNDS),
        ("kappa", *KAPPA_BOUNDS),
        ("gamma", *GAMMA_BOUNDS),
    ]
    if with_eps:
        bounds.append(("epsilon", *EPSILON_BOUNDS))

    return FitResult(
        alpha=alpha,
        kappa=kappa,
        gamma=gamma,
        epsilon=epsilon,
        rmse=rmse,
        r_squared=r_squared,
        converged=best_success and not at_bound,
        n_points=len(pts),
        residuals=tuple(float(v) for v in (pred - acc)),
        bounds=tuple(bounds),
    )


def fit_quality(
    points: Sequence[tuple[float, float]],
    fit: FitResult,
    interference: Sequence[float] | None = None,
) -> tuple[float, float]:
    """R squared and RMSE of a fitted law against observed points."""
    pts = _check_points(points)
    if not pts:
        raise InsufficientPoints("quality needs at least one point")
    acc = np.array([p[1] for p in pts])
    if float(np.ptp(acc)) == 0.0:
        raise ZeroVariance("accuracies have no variance; R squared is undefined")
    if interference is None:
        i_arr = np.zeros(len(pts))
    else:
        i_arr = np.array([float(x) for x in interference])
        if len(i_arr) != len(pts):
            raise DomainError(
                f"interference has {len(i_arr)} values for {len(pts)} points"
            )
    pred = np.array(
        [fit.predict(p[0], i) for p, i in zip(pts, i_arr)]
    )
    ss_res = float(np.sum((acc - pred) ** 2))
    ss_tot = float(np.sum((acc - acc.mean()) ** 2))
    rmse = float(np.sqrt(np.mean((acc - pred) ** 2)))
    return 1.0 - ss_res / ss_tot, rmse
