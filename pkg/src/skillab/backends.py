"""Selection backends.

Every backend exposes one method: complete(prompt, max_tokens) -> a
CompletionResult with the raw reply plus token and latency accounting. The
offline backends are deterministic: identical prompts always produce
identical replies, and the simulated backend derives all of its randomness
from (seed, stage kind, task query) so outcomes do not depend on the order
in which trials complete.
"""

from __future__ import annotations

import hashlib
import os
import threading
import time
from dataclasses import dataclass
from typing import Callable, Protocol, Sequence

from . import similarity
from .errors import (
    AuthError,
    BackendFailure,
    DomainError,
    RateLimited,
    TransportError,
)
from .prompts import ParsedPrompt, SkillGroup, parse_prompt
from .types import SkillLibrary, TaskInstance, whitespace_tokens


@dataclass(frozen=True)
class CompletionResult:
    raw: str
    prompt_tokens: int
    completion_tokens: int
    latency_ms: float = 0.0


class SelectorBackend(Protocol):
    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult: ...


def _result(prompt: str, raw: str, latency_ms: float = 0.0) -> CompletionResult:
    return CompletionResult(
        raw=raw,
        prompt_tokens=whitespace_tokens(prompt),
        completion_tokens=whitespace_tokens(raw),
        latency_ms=latency_ms,
    )


class ScriptedBackend:
    """Replays a fixed sequence of replies; exhaustion is an error.

    Useful for driving executions whose outputs the test controls. With
    cycle=True the script wraps around instead of running out.
    """

    def __init__(self, replies: list[str], cycle: bool = False):
        self._replies = list(replies)
        self._cycle = cycle
        self._index = 0
        self._lock = threading.Lock()
        self.prompts: list[str] = []

    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult:
        with self._lock:
            if self._index >= len(self._replies):
                if not self._cycle:
                    raise BackendFailure("scripted backend ran out of replies")
                self._index = 0
            reply = self._replies[self._index]
            self._index += 1
            self.prompts.append(prompt)
        return _result(prompt, reply)


class CallableBackend:
    """Adapts a plain prompt -> reply function."""

    def __init__(self, fn: Callable[[str], str]):
        self._fn = fn

    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult:
        return _result(prompt, self._fn(prompt))


def _truth_map(tasks: list[TaskInstance]) -> dict[str, str]:
    out: dict[str, str] = {}
    for t in tasks:
        prior = out.get(t.query)
        if prior is not None and prior != t.truth:
            raise BackendFailure(
                f"two tasks share the query {t.query!r} with different truths"
            )
        out[t.query] = t.truth
    return out


def _label_map(grouping: Sequence[SkillGroup] | None) -> dict[str, str] | None:
    if grouping is None:
        return None
    return {sid: g.label for g in grouping for sid in g.skill_ids}


def _category_key(
    parsed: ParsedPrompt,
    library: SkillLibrary,
    truth_id: str,
    label_of: dict[str, str] | None = None,
) -> str | None:
    """Which displayed category contains the truth skill.

    With a grouping on hand the answer is exact: the label of the group the
    truth belongs to. Without one, fall back to probing the skill's group
    id, then its domain, then its descriptor name against the displayed
    labels. Returns None when the truth's category is simply not on offer.
    """
    names = [key for key, _ in parsed.candidates]
    if label_of is not None:
        label = label_of.get(truth_id)
        return label if label in names else None
    meta = library.meta_for(truth_id)
    for probe in (meta.group_id, meta.domain, library.by_id(truth_id).name):
        if probe and probe in names:
            return probe
    return None


class ExactOracleBackend:
    """Always answers with the ground-truth skill (or its category).

    Built from the same task list the trial loop uses, so it can recover the
    truth from the query embedded in the prompt. Pass the grouping used for
    two-stage runs so category answers resolve exactly.
    """

    def __init__(
        self,
        library: SkillLibrary,
        tasks: list[TaskInstance],
        grouping: Sequence[SkillGroup] | None = None,
    ):
        self._library = library
        self._truths = _truth_map(tasks)
        self._label_of = _label_map(grouping)

    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult:
        parsed = parse_prompt(prompt)
        truth_id = self._truths.get(parsed.query)
        if truth_id is None:
            raise BackendFailure(f"oracle has no truth for query {parsed.query!r}")
        if parsed.kind == "category":
            key = _category_key(parsed, self._library, truth_id, self._label_of)
            reply = key if key is not None else parsed.candidates[0][0]
        else:
            reply = truth_id
        return _result(prompt, reply)


@dataclass(frozen=True)
class SimParams:
    """Parameters of the simulated selector's success probability.

    The chance of picking the right candidate among n is
    alpha / (1 + (n / kappa) ** gamma) minus epsilon times the local
    interference (mean descriptor similarity between the correct candidate
    and the others shown), clamped to [0, 1].
    """

    alpha: float = 0.96
    kappa: float = 91.8
    gamma: float = 1.72
    epsilon: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.2:
            raise DomainError(f"alpha must be in (0, 1.2], got {self.alpha}")
        if self.kappa <= 0:
            raise DomainError(f"kappa must be positive, got {self.kappa}")
        if self.gamma <= 0:
            raise DomainError(f"gamma must be positive, got {self.gamma}")
        if self.epsilon < 0:
            raise DomainError(f"epsilon must be non-negative, got {self.epsilon}")


def _unit_draws(seed: int, stage: str, query: str) -> tuple[float, float]:
    """Two uniforms in [0, 1) addressed purely by content, never by order."""
    digest = hashlib.sha256(f"{seed}|{stage}|{query}".encode("utf-8")).digest()
    u = int.from_bytes(digest[:8], "big") / 2.0**64
    v = int.from_bytes(digest[8:16], "big") / 2.0**64
    return u, v


class SimulatedBackend:
    """Capacity-limited selector model.

    Answers selection prompts the way a saturating selector would: correct
    with probability alpha / (1 + (n / kappa) ** gamma) - epsilon * I_local,
    otherwise picking a wrong candidate with probability proportional to its
    descriptor similarity to the correct one. First-stage (category) and
    skill-stage draws use independent streams.
    """

    def __init__(
        self,
        params: SimParams,
        library: SkillLibrary,
        tasks: list[TaskInstance],
        seed: int | None = None,
        grouping: Sequence[SkillGroup] | None = None,
    ):
        self.params = params
        self._library = library
        self._truths = _truth_map(tasks)
        self._seed = params.seed if seed is None else seed
        self._label_of = _label_map(grouping)
        self._sim_cache: dict[tuple[str, str], float] = {}

    @staticmethod
    def success_probability(params: SimParams, n: int, i_local: float) -> float:
        base = params.alpha / (1.0 + (n / params.kappa) ** params.gamma)
        return min(1.0, max(0.0, base - params.epsilon * i_local))

    def _sim(self, a: str, b: str) -> float:
        key = (a, b)
        cached = self._sim_cache.get(key)
        if cached is None:
            cached = similarity.jaccard(a, b)
            self._sim_cache[key] = cached
            self._sim_cache[(b, a)] = cached
        return cached

    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult:
        parsed = parse_prompt(prompt)
        truth_id = self._truths.get(parsed.query)
        if truth_id is None:
            raise BackendFailure(f"simulator has no truth for query {parsed.query!r}")

        if parsed.kind == "category":
            correct_key = _category_key(parsed, self._library, truth_id, self._label_of)
        else:
            keys = {key for key, _ in parsed.candidates}
            correct_key = truth_id if truth_id in keys else None

        u, v = _unit_draws(self._seed, parsed.kind, parsed.query)

        if correct_key is not None:
            correct_text = next(t for k, t in parsed.candidates if k == correct_key)
            others = [(k, t) for k, t in parsed.candidates if k != correct_key]
            if not others:
                return _result(prompt, correct_key)
            i_local = 0.0
            if self.params.epsilon != 0.0:
                i_local = sum(self._sim(correct_text, t) for _, t in others) / len(others)
            p = self.success_probability(self.params, len(parsed.candidates), i_local)
            if u < p:
                return _result(prompt, correct_key)
        else:
            # The right answer is not on offer (e.g. second stage after a
            # wrong category); fall through to a similarity-weighted error.
            correct_text = self._library.by_id(truth_id).descriptor
            others = list(parsed.candidates)

        weights = [self._sim(correct_text, t) for _, t in others]
        total = sum(weights)
        if total <= 0.0:
            index = min(int(v * len(others)), len(others) - 1)
            return _result(prompt, others[index][0])
        threshold = v * total
        acc = 0.0
        for (key, _), w in zip(others, weights):
            acc += w
            if threshold < acc:
                return _result(prompt, key)
        return _result(prompt, others[-1][0])


# ---------------------------------------------------------------------------
# Live HTTP backend
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LlmConfig:
    """Connection settings for a chat-completions-compatible endpoint.

    The credential is read from the environment variable named by
    credential_env at call time and never appears in CLI flags or files.
    """

    endpoint: str
    model_id: str
    credential_env: str = "SKILLAB_API_KEY"
    timeout_s: float = 30.0
    max_retries: int = 4
    backoff_s: float = 0.5
    requests_per_minute: float | None = None
    temperature: float = 0.0


@dataclass(frozen=True)
class UsageRecord:
    prompt_tokens: int
    completion_tokens: int
    latency_ms: float
    status: int


class _Pacer:
    """Serializes call starts so a requests-per-minute budget is respected."""

    def __init__(self, requests_per_minute: float | None):
        self._interval = 60.0 / requests_per_minute if requests_per_minute else 0.0
        self._lock = threading.Lock()
        self._next_at = 0.0

    def wait(self):
        if self._interval <= 0:
            return
        with self._lock:
            now = time.monotonic()
            start = max(now, self._next_at)
            self._next_at = start + self._interval
        delay = start - now
        if delay > 0:
            time.sleep(delay)


def _default_transport(url: str, headers: dict, payload: dict, timeout: float):
    import requests

    try:
        resp = requests.post(url, headers=headers, json=payload, timeout=timeout)
    except requests.RequestException as exc:
        raise TransportError(f"request failed: {exc}") from exc
    try:
        body = resp.json()
    except ValueError:
        body = {}
    return resp.status_code, body


class LlmBackend:
    """Talks to a chat-completions endpoint at temperature zero.

    transport is injectable for tests: a callable of (url, headers, payload,
    timeout) returning (status_code, body_dict).
    """

    def __init__(self, config: LlmConfig, transport=None):
        self.config = config
        self._transport = transport or _default_transport
        self._pacer = _Pacer(config.requests_per_minute)
        self._lock = threading.Lock()
        self.usage: list[UsageRecord] = []

    def _credential(self) -> str:
        value = os.environ.get(self.config.credential_env, "")
        if not value:
            raise AuthError(
                f"environment variable {self.config.credential_env} is not set; "
                "no request was sent"
            )
        return value

    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult:
        credential = self._credential()
        url = self.config.endpoint.rstrip("/") + "/chat/completions"
        headers = {
            "Authorization": f"Bearer {credential}",
            "Content-Type": "application/json",
        }
        payload = {
            "model": self.config.model_id,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.config.temperature,
            "max_tokens": max_tokens,
        }
        attempts = self.config.max_retries + 1
        last_error: Exception | None = None
        for attempt in range(attempts):
            if attempt > 0:
                time.sleep(self.config.backoff_s * (2 ** (attempt - 1)))
            self._pacer.wait()
            started = time.monotonic()
            try:
                status, body = self._transport(
                    url, headers, payload, self.config.timeout_s
                )
            except TransportError as exc:
                last_error = exc
                continue
            latency_ms = (time.monotonic() - started) * 1000.0
            if status in (401, 403):
                raise AuthError(f"endpoint rejected the credential (HTTP {status})")
            if status == 429:
                last_error = RateLimited("endpoint rate-limited the request")
                continue
            if status >= 500:
                last_error = TransportError(f"endpoint error HTTP {status}")
                continue
            if status != 200:
                raise TransportError(f"unexpected HTTP {status}")
            try:
                raw = body["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError) as exc:
                raise TransportError(f"malformed completion body: {exc!r}") from exc
            usage = body.get("usage", {})
            result = CompletionResult(
                raw=raw,
                prompt_tokens=int(usage.get("prompt_tokens", whitespace_tokens(prompt))),
                completion_tokens=int(
                    usage.get("completion_tokens", whitespace_tokens(raw))
                ),
                latency_ms=latency_ms,
            )
            with self._lock:
                self.usage.append(
                    UsageRecord(
                        prompt_tokens=result.prompt_tokens,
                        completion_tokens=result.completion_tokens,
                        latency_ms=latency_ms,
                        status=status,
                    )
                )
            return result
        if isinstance(last_error, RateLimited):
            raise last_error
        raise last_error if last_error else TransportError("no attempts were made")


def simulated_backend(
    params: SimParams,
    library: SkillLibrary,
    tasks: list[TaskInstance],
    grouping: Sequence[SkillGroup] | None = None,
) -> SimulatedBackend:
    """Capacity-model backend seeded from params.seed."""
    return SimulatedBackend(params, library, tasks, grouping=grouping)


def llm_backend(
    endpoint: str,
    model_id: str,
    credential_env: str = "SKILLAB_API_KEY",
    requests_per_minute: float | None = None,
    **settings,
) -> LlmBackend:
    """Live backend; the credential is read from credential_env at call time."""
    config = LlmConfig(
        endpoint=endpoint,
        model_id=model_id,
        credential_env=credential_env,
        requests_per_minute=requests_per_minute,
        **settings,
    )
    return LlmBackend(config)
