import hypothesis

hypothesis.settings.register_profile(
    "qcrit", max_examples=60, deadline=None, derandomize=True)
hypothesis.settings.load_profile("qcrit")
