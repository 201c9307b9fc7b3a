"""Ready-made agent graphs for demos and tests.

Three small evaluation pipelines (math word problems, code refinement,
multi-hop question answering) plus the six architecture archetypes used by
the compilability matrix. Role texts carry explicit CAPABILITY annotations so
rule-mode decomposition is deterministic and auditable.
"""

from __future__ import annotations

from .types import (
    AgentSpec,
    MASSpec,
    Protocol,
    ROUTE_BOUNDED_LOOP,
    ROUTE_DEBATE,
    ROUTE_LINEAR,
    ROUTE_PARALLEL,
    ROUTE_ROUTER,
)


def math_pipeline() -> MASSpec:
    """Three-stage pipeline for grade-school math word problems."""
    return MASSpec(
        agents=(
            AgentSpec(
                id="decomposer",
                role=(
                    "Splits a math word problem into solvable steps.\n"
                    "CAPABILITY: decompose: Break problem into steps"
                ),
            ),
            AgentSpec(
                id="solver",
                role=(
                    "Works each step numerically.\n"
                    "CAPABILITY: solve: Execute calculations"
                ),
            ),
            AgentSpec(
                id="verifier",
                role=(
                    "Checks the finished solution.\n"
                    "CAPABILITY: verify: Validate solution"
                ),
            ),
        ),
        edges=(("decomposer", "solver"), ("solver", "verifier")),
        protocol=Protocol(route_rule=ROUTE_LINEAR, max_rounds=3),
    )


def code_refinement_loop() -> MASSpec:
    """Code generation with a bounded critique-and-fix loop."""
    return MASSpec(
        agents=(
            AgentSpec(
                id="coder",
                role=(
                    "Writes a first implementation.\n"
                    "CAPABILITY: code: Generate implementation"
                ),
            ),
            AgentSpec(
                id="critic",
                role=(
                    "Reads the implementation looking for defects.\n"
                    "CAPABILITY: critique: Review for bugs"
                ),
            ),
            AgentSpec(
                id="refiner",
                role=(
                    "Applies the critic's findings.\n"
                    "CAPABILITY: refine: Fix identified issues"
                ),
            ),
        ),
        edges=(("coder", "critic"), ("critic", "refiner"), ("refiner", "critic")),
        protocol=Protocol(route_rule=ROUTE_BOUNDED_LOOP, max_rounds=3),
    )


def qa_router() -> MASSpec:
    """Router over two workers feeding an aggregator, for multi-hop QA."""
    return MASSpec(
        agents=(
            AgentSpec(
                id="router",
                role=(
                    "Decides what information the question needs.\n"
                    "CAPABILITY: analyze: Plan information needs"
                ),
            ),
            AgentSpec(
                id="retriever",
                role=(
                    "Pulls supporting facts.\n"
                    "CAPABILITY: retrieve: Extract relevant facts"
                ),
            ),
            AgentSpec(
                id="reasoner",
                role=(
                    "Connects the facts.\n"
                    "CAPABILITY: reason: Chain logical steps"
                ),
            ),
            AgentSpec(
                id="aggregator",
                role=(
                    "Writes the final answer.\n"
                    "CAPABILITY: synthesize: Produce final answer"
                ),
            ),
        ),
        edges=(
            ("router", "retriever"),
            ("router", "reasoner"),
            ("retriever", "aggregator"),
            ("reasoner", "aggregator"),
        ),
        protocol=Protocol(route_rule=ROUTE_ROUTER, max_rounds=4),
    )


# ---------------------------------------------------------------------------
# Architecture archetypes for the compilability matrix
# ---------------------------------------------------------------------------


def archetype_pipeline() -> MASSpec:
    return math_pipeline()


def archetype_router_workers() -> MASSpec:
    return qa_router()


def archetype_iterative_refinement() -> MASSpec:
    """Writer and critic alternating under a bounded loop."""
    return MASSpec(
        agents=(
            AgentSpec(
                id="writer",
                role="Drafts text.\nCAPABILITY: draft: Produce a draft",
            ),
            AgentSpec(
                id="critic",
                role="Critiques drafts.\nCAPABILITY: critique: Point out flaws",
            ),
        ),
        edges=(("writer", "critic"), ("critic", "writer")),
        protocol=Protocol(route_rule=ROUTE_BOUNDED_LOOP, max_rounds=3),
    )


def archetype_debate() -> MASSpec:
    """Two agents arguing opposite sides; adversarial by construction."""
    return MASSpec(
        agents=(
            AgentSpec(
                id="proponent",
                role="Argues for the motion.",
                adversarial=True,
            ),
            AgentSpec(
                id="opponent",
                role="Argues against the motion.",
                adversarial=True,
            ),
        ),
        edges=(("proponent", "opponent"), ("opponent", "proponent")),
        protocol=Protocol(route_rule=ROUTE_DEBATE, max_rounds=6),
    )


def archetype_parallel_sampling() -> MASSpec:
    """Independent samplers whose outputs would be joined best-of-n."""
    return MASSpec(
        agents=(
            AgentSpec(id="sampler_a", role="Proposes one candidate answer."),
            AgentSpec(id="sampler_b", role="Proposes one candidate answer, again."),
            AgentSpec(id="sampler_c", role="Proposes a third candidate answer."),
        ),
        edges=(),
        protocol=Protocol(route_rule=ROUTE_PARALLEL, max_rounds=1),
    )


def archetype_private_information() -> MASSpec:
    """A negotiation pipeline where one side holds hidden state."""
    return MASSpec(
        agents=(
            AgentSpec(
                id="buyer",
                role="Negotiates a purchase with a hidden budget limit.",
                private_state=True,
            ),
            AgentSpec(id="seller", role="Negotiates the sale price."),
        ),
        edges=(("buyer", "seller"),),
        protocol=Protocol(route_rule=ROUTE_LINEAR, max_rounds=4),
    )


BENCHMARKS = {
    "math-pipeline": math_pipeline,
    "code-refinement": code_refinement_loop,
    "qa-router": qa_router,
}

ARCHETYPES = {
    "pipeline": archetype_pipeline,
    "router-workers": archetype_router_workers,
    "iterative-refinement": archetype_iterative_refinement,
    "debate": archetype_debate,
    "parallel-sampling": archetype_parallel_sampling,
    "private-information": archetype_private_information,
}
