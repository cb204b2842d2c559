from hypothesis import HealthCheck, settings

# property tests run bignum/image code whose per-example time varies a lot;
# wall-clock deadlines just add flakiness
settings.register_profile(
    "palstego", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("palstego")
