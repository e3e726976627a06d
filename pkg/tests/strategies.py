from hypothesis import strategies as st

from uniserial.site import CoverPoint, big_tube, line, tube
from uniserial.tube import make_object

tubes = st.integers(1, 5).map(tube)
loop_sites = st.one_of(tubes, st.just(big_tube("int")), st.just(big_tube("int_pairs_lex")))
finite_lines = st.integers(1, 8).map(line)
all_sites = st.one_of(loop_sites, finite_lines, st.just(line()))


@st.composite
def vertices(draw, site):
    if site.base == "cyclic":
        return draw(st.integers(0, site.rank - 1))
    if site.base == "finite":
        return draw(st.integers(1, site.size))
    if site.base == "int":
        return draw(st.integers(-30, 30))
    return (draw(st.integers(-2, 2)), draw(st.integers(-30, 30)))


@st.composite
def points(draw, site):
    deck = draw(st.integers(-5, 5)) if site.is_loop else 0
    return CoverPoint(deck, draw(vertices(site)))


@st.composite
def objects(draw, site, max_winding=3):
    s, t = draw(vertices(site)), draw(vertices(site))
    if not site.is_loop:
        s, t = min(s, t), max(s, t)
        return make_object(site, s, t)
    return make_object(site, s, t, draw(st.integers(0, max_winding)))


@st.composite
def site_and_objects(draw, n=2, sites=all_sites, max_winding=3):
    site = draw(sites)
    return (site, *[draw(objects(site, max_winding)) for _ in range(n)])
