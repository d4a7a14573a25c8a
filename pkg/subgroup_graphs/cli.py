"""
Command-line interface for subgroup intersection graphs.

Builds groups from family specs (``cyclic:12``, ``modular:3,3``, ``sd:q=5,p=2,a=2,t=2`` ...),
prints their lattices and intersection graphs, classifies them, computes the
genus of graph files and runs the verification suites.

Exit codes: 0 success, 1 property failure, 2 budget exceeded, 64 usage error.
"""

# Standard library imports
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

# Third-party imports
import click
import typer
import yaml

from subgroup_graphs.classify import analyse_group, intersection_graph
from subgroup_graphs.config import RunConfig, load_config
from subgroup_graphs.embedding import format_scheme
from subgroup_graphs.errors import (
    OrderBudgetExceeded,
    SearchBudgetExceeded,
    SubgroupGraphError,
)
from subgroup_graphs.expected import expected_model_for
from subgroup_graphs.families import format_family, parse_family
from subgroup_graphs.genus import nonorientable_genus, orientable_genus
from subgroup_graphs.graphs import export_graph, eval_expr, format_expr, is_isomorphic, read_adjacency
from subgroup_graphs.groups import FiniteGroup, build_family, center, element_orders, is_abelian, verify_group_axioms
from subgroup_graphs.lattice import enumerate_subgroups, export_lattice_csv, prime_order_count, subgroup_counts_by_order
from subgroup_graphs.reports import write_classification, write_suite_report
from subgroup_graphs.suites import SUITE_ALIASES, SUITES, verify_claims

# Constants
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64

app = typer.Typer(help="Intersection graphs of subgroups: lattices, genus and classification checks.")
group_app = typer.Typer(help="Inspect a group built from a family spec.")
app.add_typer(group_app, name="group")


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Turn library errors into one ❌ line and the matching exit code."""
    try:
        yield
    except (OrderBudgetExceeded, SearchBudgetExceeded) as exc:
        typer.echo(f"❌ Budget exceeded: {exc}", err=True)
        raise typer.Exit(EXIT_BUDGET)
    except SubgroupGraphError as exc:
        typer.echo(f"❌ {exc}", err=True)
        raise typer.Exit(EXIT_USAGE)
    except OSError as exc:
        typer.echo(f"❌ Cannot read or write {exc.filename or ''}: {exc.strerror}", err=True)
        raise typer.Exit(EXIT_USAGE)


def _config(ctx: typer.Context) -> RunConfig:
    if isinstance(ctx.obj, RunConfig):
        return ctx.obj
    return RunConfig()


def _build(text: str, config: RunConfig) -> FiniteGroup:
    return build_family(parse_family(text), config.max_order)


@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", help="YAML file with budgets and output settings."),
) -> None:
    with _exit_codes():
        ctx.obj = load_config(config)


@group_app.command("show")
def group_show(ctx: typer.Context, spec: str = typer.Argument(..., help="Family spec, e.g. dihedral:12")) -> None:
    """Order, center, element orders and an axiom check."""
    with _exit_codes():
        g = _build(spec, _config(ctx))
        orders = element_orders(g)
        histogram = {}
        for value in orders.tolist():
            histogram[value] = histogram.get(value, 0) + 1
        report = verify_group_axioms(g)
    typer.echo(f"🔍 {g.name} ({format_family(g.family)})")
    typer.echo(f"order: {g.order}")
    typer.echo(f"abelian: {'yes' if is_abelian(g) else 'no'}")
    typer.echo(f"center order: {len(center(g))}")
    typer.echo("element orders: " + " ".join(f"{k}:{v}" for k, v in sorted(histogram.items())))
    if not report.ok:
        failed = [name for name in ("closure", "identity", "inverses", "associativity") if not getattr(report, name)]
        typer.echo(f"❌ Group axioms fail: {', '.join(failed)} (witness {report.witness})", err=True)
        raise typer.Exit(EXIT_FAILURE)
    typer.echo("✅ Group axioms verified")


@app.command()
def lattice(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Family spec."),
    csv: bool = typer.Option(False, "--csv", help="Print one CSV row per subgroup instead of a summary."),
) -> None:
    """Subgroup counts by order (or the full lattice as CSV)."""
    with _exit_codes():
        config = _config(ctx)
        lat = enumerate_subgroups(_build(spec, config), config.max_order)
    if csv:
        typer.echo(export_lattice_csv(lat), nl=False)
        return
    typer.echo(f"📦 {len(lat.all)} subgroups, {len(lat.proper_nontrivial)} proper nontrivial")
    for order, count in subgroup_counts_by_order(lat).items():
        typer.echo(f"order {order}: {count}")
    typer.echo(f"prime-order subgroups: {prime_order_count(lat)}")


@app.command()
def igraph(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Family spec."),
    export: Optional[str] = typer.Option(None, "--export", help="Print the graph as 'dot' or 'adjacency'."),
) -> None:
    """The intersection graph, compared with its closed-form model when there is one."""
    with _exit_codes():
        config = _config(ctx)
        family = parse_family(spec)
        lat = enumerate_subgroups(build_family(family, config.max_order), config.max_order)
        graph = intersection_graph(lat)
        if export is not None:
            data = export_graph(graph, export, name=format_family(family))
            typer.echo(data.decode("utf-8"), nl=False)
            return
        model = expected_model_for(family)
        matched = None if model is None else is_isomorphic(graph, eval_expr(model))[0]
    typer.echo(f"📦 {graph.n} vertices, {graph.m} edges")
    adjacency = graph.adjacency()
    for v in range(graph.n):
        label = graph.labels[v] if graph.labels else str(v)
        typer.echo(f"{v} [{label}]: {' '.join(str(u) for u in sorted(adjacency[v]))}")
    if model is None:
        return
    if matched:
        typer.echo(f"✅ Isomorphic to {format_expr(model)}")
    else:
        typer.echo(f"⚠️ Not isomorphic to {format_expr(model)}")


@app.command()
def classify(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Family spec."),
    budget: Optional[int] = typer.Option(None, "--budget", help="Genus search node budget."),
    output_dir: Optional[str] = typer.Option(None, "--output-dir", help="Directory for reports and fixtures."),
) -> None:
    """Every decided property of the group's intersection graph."""
    with _exit_codes():
        config = _config(ctx).with_overrides(genus_node_budget=budget, output_dir=output_dir)
        typer.echo(f"📡 Classifying {spec}...")
        analysis = analyse_group(_build(spec, config), config)
        written = write_classification(analysis.report, analysis.graph, analysis.schemes, config.output_dir, config.formats)
    report = analysis.report
    typer.echo(yaml.safe_dump(report.model_dump(), sort_keys=False, allow_unicode=True), nl=False)
    typer.echo(f"📂 Wrote {len(written)} files under {config.output_dir}")
    for note in report.flagged:
        typer.echo(f"⚠️ Known discrepancy: {note}")
    if report.budget_exceeded:
        typer.echo("⚠️ Search budget exceeded; some properties are undecided", err=True)
        raise typer.Exit(EXIT_BUDGET)
    if report.weakly_alpha_perfect is False:
        typer.echo("❌ alpha, theta and the prime-order subgroup count differ", err=True)
        raise typer.Exit(EXIT_FAILURE)
    typer.echo("✅ Classification complete")


@app.command()
def verify(
    ctx: typer.Context,
    suite: str = typer.Argument(..., help=f"One of: {', '.join(SUITES)} (aliases: {', '.join(SUITE_ALIASES)})"),
    max_order: Optional[int] = typer.Option(None, "--max-order", help="Largest group order in the catalog."),
    budget: Optional[int] = typer.Option(None, "--budget", help="Genus search node budget per instance."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker processes."),
    output_dir: Optional[str] = typer.Option(None, "--output-dir", help="Directory for reports and fixtures."),
) -> None:
    """Replay one suite of classification claims over the catalog."""
    with _exit_codes():
        config = _config(ctx).with_overrides(
            max_order=max_order,
            genus_node_budget=budget,
            workers=workers,
            output_dir=output_dir,
        )
        typer.echo(f"📡 Running {suite} up to order {config.max_order}...")
        report = verify_claims(suite, config.max_order, config, progress=lambda key: typer.echo(f"🔍 {key}"))
        written = write_suite_report(report, config.output_dir, config.formats)
    for row in report.rows:
        if row.status == "fail":
            typer.echo(f"❌ {row.family} {row.property}: computed {row.computed}, expected {row.expected}")
        elif row.status in ("flagged", "budget"):
            typer.echo(f"⚠️ {row.family} {row.property}: {row.status} {row.note}".rstrip())
    counts = ", ".join(f"{status} {report.count(status)}" for status in ("pass", "fail", "flagged", "budget"))
    typer.echo(f"📂 Wrote {len(written)} files under {config.output_dir}")
    if not report.ok:
        typer.echo(f"❌ {suite}: {counts}")
        raise typer.Exit(EXIT_FAILURE)
    if report.count("budget"):
        typer.echo(f"⚠️ {suite}: {counts}")
        raise typer.Exit(EXIT_BUDGET)
    typer.echo(f"✅ {suite}: {counts}")


def _genus_command(ctx: typer.Context, graph_file: Path, budget: Optional[int], scheme_out: Optional[Path], orientable: bool) -> None:
    with _exit_codes():
        config = _config(ctx).with_overrides(genus_node_budget=budget)
        graph = read_adjacency(graph_file.read_text(encoding="utf-8"))
        search = orientable_genus if orientable else nonorientable_genus
        result = search(graph, budget=config.genus_node_budget)
        if scheme_out is not None and result.scheme is not None:
            scheme_out.write_text(format_scheme(result.scheme), encoding="utf-8")
    if result.exact:
        typer.echo(str(result.value))
        return
    typer.echo(f"{result.lower}..{result.upper}")
    typer.echo(f"⚠️ Search budget exhausted after {result.nodes_explored} nodes", err=True)
    raise typer.Exit(EXIT_BUDGET)


@app.command()
def genus(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Adjacency file: 'n m' then one 'u v' line per edge."),
    budget: Optional[int] = typer.Option(None, "--budget", help="Search node budget."),
    scheme_out: Optional[Path] = typer.Option(None, "--scheme", help="Write the embedding scheme here."),
) -> None:
    """Orientable genus of a graph file."""
    _genus_command(ctx, graph_file, budget, scheme_out, orientable=True)


@app.command()
def crosscap(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Adjacency file: 'n m' then one 'u v' line per edge."),
    budget: Optional[int] = typer.Option(None, "--budget", help="Search node budget."),
    scheme_out: Optional[Path] = typer.Option(None, "--scheme", help="Write the embedding scheme here."),
) -> None:
    """Nonorientable genus (crosscap number) of a graph file."""
    _genus_command(ctx, graph_file, budget, scheme_out, orientable=False)


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on ``argv`` and return its exit code; usage errors map to 64."""
    try:
        code = app(args=argv, prog_name="subgroup-graphs", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_FAILURE
    except click.Abort:
        return EXIT_FAILURE
    return code if isinstance(code, int) else EXIT_OK


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
