from braidlink.braid import closure_components, random_braid


def random_two_component(rng, max_n=6, max_len=10):
    """A random braid whose closure has exactly two components."""
    while True:
        n = rng.randint(2, max_n)
        b = random_braid(rng, n, rng.randint(0, max_len))
        comps = closure_components(b)
        if len(comps) == 2:
            return b, comps


ACCEPTANCE_LINES: list[str] = []
