from hypothesis import settings

settings.register_profile("deterministic", derandomize=True, max_examples=150)
settings.load_profile("deterministic")
