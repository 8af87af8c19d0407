from hypothesis import settings

# exact integer algebra on cold memo caches can blow the default per-example
# deadline; wall-clock limits add no value to deterministic checks
settings.register_profile("liewords", deadline=None)
settings.load_profile("liewords")
