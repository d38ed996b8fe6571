from importlib import resources
from pathlib import Path

import pytest

import tests.unit.fixtures
from semica.cli import JobKind, examples_catalog, format_spec, parse_spec, run_job
from semica.cli.jobs import Regions
from semica.errors import InvalidInputError, SpecSyntaxError
from semica.semigroups import BicyclicMonoid, FiniteSemigroup, NaturalNumbers


@pytest.fixture
def fixtures_dir():
    return Path(str(resources.files(tests.unit.fixtures)))


def _read(fixtures_dir: Path, name: str) -> str:
    return (fixtures_dir / name).read_text()


def test_parse_shift_on_nat(fixtures_dir):
    spec = parse_spec(_read(fixtures_dir, "shift_on_nat.spec"))
    assert spec.semigroup == NaturalNumbers()
    assert spec.kind == JobKind.AUDIT
    assert spec.name == "nat-shift"
    assert spec.q == 2
    assert spec.automaton.memory == (1,)
    assert spec.automaton.rule == (0, 1)
    assert spec.index_range == (1, 12)
    schedule = spec.schedule()
    assert len(schedule) == 12
    assert schedule[2].elements == (0, 1, 2)


def test_parse_bicyclic_windows(fixtures_dir):
    spec = parse_spec(_read(fixtures_dir, "bicyclic_goe.spec"))
    assert spec.semigroup == BicyclicMonoid()
    assert spec.automaton.memory == ((0, 1),)
    assert [w.elements for w in spec.schedule()] == [((0, 0),), ((0, 0), (1, 1))]

    # word literals name the same element
    text = _read(fixtures_dir, "bicyclic_goe.spec").replace("memory = (0,1)", "memory = p")
    assert parse_spec(text) == spec


def test_left_zero_regions(fixtures_dir):
    spec = parse_spec(_read(fixtures_dir, "left_zero_regions.spec"), base_dir=fixtures_dir)
    assert isinstance(spec.semigroup, FiniteSemigroup)
    assert spec.semigroup.size == 3

    (regions,) = run_job(spec).results
    assert isinstance(regions, Regions)
    report = regions.report
    assert len(report.interior) == 0
    assert len(report.adherence) == 0
    assert report.alpha == 1
    assert report.alpha_star == 0
    assert report.formula_check is None


def test_table_path_is_resolved_against_base_dir(fixtures_dir, tmp_path):
    with pytest.raises(OSError):
        parse_spec(_read(fixtures_dir, "left_zero_regions.spec"), base_dir=tmp_path)


def test_inline_table_rows():
    spec = parse_spec(
        "[semigroup]\nfamily = finite\nrow = 0 1\nrow = 1 1\n[job]\nkind = regions\nomega = 0\nk = 1\n"
    )
    assert spec.semigroup.rows == ((0, 1), (1, 1))


_AUTOMATON = """\
[semigroup]
family = nat
[alphabet]
size = 2
[automaton]
memory = 0 1
0 0 -> 0
0 1 -> 1
1 0 -> 1
{last}
[job]
kind = goe
omega = 0 1 2
"""


def test_missing_rule_tuple():
    with pytest.raises(InvalidInputError, match="not total") as e:
        parse_spec(_AUTOMATON.format(last=""))
    assert e.value.line == 7
    assert e.value.field == "rule"


def test_bad_rule_output():
    with pytest.raises(InvalidInputError) as e:
        parse_spec(_AUTOMATON.format(last="1 1 -> 2"))
    assert e.value.field == "rule"

    with pytest.raises(SpecSyntaxError):
        parse_spec(_AUTOMATON.format(last="1 1 -> x"))


def test_complete_rule_table_parses():
    spec = parse_spec(_AUTOMATON.format(last="1 1 -> 0"))
    assert spec.automaton.rule == (0, 1, 1, 0)
    assert spec.omega.elements == (0, 1, 2)


@pytest.mark.parametrize(
    "text, line, field",
    [
        ("[semigroup]\nfamily = nat\n[job]\nkind = goe\ncolour = red\n", 5, "colour"),
        ("[semigroup]\nfamily = nat\n[jobs]\n", 3, None),
        ("family = nat\n", 1, None),
        ("[semigroup]\nfamily = nat\nfamily = bicyclic\n", 3, "family"),
        ("[semigroup]\nfamily = nat\n[job]\nkind = goe\nwindows = 1-4\n", 5, "windows"),
        ("[semigroup]\nfamily = nat\n[job]\nkind = sort\n", 4, "kind"),
    ],
)
def test_syntax_errors_name_the_line(text, line, field):
    with pytest.raises(SpecSyntaxError) as e:
        parse_spec(text)
    assert e.value.line == line
    assert e.value.field == field


def test_missing_job_parameters():
    with pytest.raises(InvalidInputError, match="needs an automaton"):
        parse_spec("[semigroup]\nfamily = nat\n[job]\nkind = goe\nomega = 0\n")
    with pytest.raises(InvalidInputError, match="needs k"):
        parse_spec("[semigroup]\nfamily = nat\n[job]\nkind = regions\nomega = 0\n")


def test_elements_must_belong_to_the_family():
    with pytest.raises(InvalidInputError) as e:
        parse_spec("[semigroup]\nfamily = nat\n[job]\nkind = regions\nomega = 0 -1\nk = 1\n")
    assert e.value.line == 5


@pytest.mark.parametrize("spec", examples_catalog(), ids=lambda s: s.name)
def test_catalog_specs_format_and_parse_back(spec):
    assert parse_spec(format_spec(spec)) == spec
