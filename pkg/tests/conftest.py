from hypothesis import HealthCheck, settings

# property tests here are numeric and fast; disable the wall-clock deadline
# so a loaded machine cannot produce spurious failures
settings.register_profile(
    "pathamp",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pathamp")
