from sepscan.models.report import CoherentReport, FuzzSummary, Report
from sepscan.models.state import format_labels


def fmt(value: float) -> str:
    """Fixed rendering: ten decimals at most, trailing zeros dropped, never -0."""
    text = f"{round(value, 10) + 0.0:.10f}".rstrip("0")
    return text + "0" if text.endswith(".") else text


def render_report(report: Report) -> str:
    lines = []
    if report.disagreement:
        lines.append("WARNING: criterion and oracle disagree; see DISAGREE rows")
    if report.label:
        lines.append(f"state: {report.label}")
    blocks = ", ".join(
        format_labels(block.labels) + (" (entangled)" if block.entangled else "")
        for block in report.blocks
    )
    lines.append(f"{report.summary}, blocks: {blocks}")
    lines.append(f"n: {report.n}")
    lines.append(f"digest: {report.input_digest}")
    lines.append(
        "polarized norms: "
        + " ".join(f"A{k}={fmt(v)}" for k, v in enumerate(report.polarized_norms, start=1))
    )
    for verdict in report.verdicts:
        flags = ""
        if verdict.marginal:
            flags += " [marginal]"
        if not verdict.agree:
            flags += " [DISAGREE]"
        lines.append(
            f"block {format_labels(verdict.block)}: xi^2={fmt(verdict.norm_sq)} "
            f"max={fmt(verdict.max_norm_sq)} residual={fmt(verdict.residual)} "
            f"criterion={'separable' if verdict.criterion_separable else 'entangled'} "
            f"oracle={'separable' if verdict.oracle_separable else 'entangled'}{flags}"
        )
    if report.support_class is not None:
        support = report.support_class
        lines.append(f"table class: {support.class_label.value} (support {support.letters})")
    return "\n".join(lines)


def render_coherent(report: CoherentReport) -> str:
    lines = [f"block {format_labels(report.block)} (m={report.m})", "components:"]
    lines += [
        f"  {name} {fmt(value)}"
        for name, value in zip(report.multi_indices, report.components)
    ]
    lines.append(
        f"norm² {fmt(report.norm_sq)}, max {fmt(report.max_norm_sq)}, "
        f"residual {fmt(report.residual)}"
    )
    lines.append(f"separable: {'yes' if report.separable else 'no'}")
    return "\n".join(lines)


def render_fuzz(summary: FuzzSummary) -> str:
    lines = [
        f"n={summary.n} trials={summary.trials} seed={summary.seed}",
        f"agreement: {summary.agreements}/{summary.trials}",
        f"blocks checked: {summary.blocks_checked}",
        f"max residual (separable verdicts): {summary.max_residual:.3e}",
        f"max channel discrepancy: {summary.max_discrepancy:.3e}",
    ]
    if summary.max_two_qubit_deviation is not None:
        lines.append(f"max |xi^2 - (1-4|ad-bc|^2)|: {summary.max_two_qubit_deviation:.3e}")
    lines += [f"DISAGREE: {item}" for item in summary.disagreements]
    return "\n".join(lines)
