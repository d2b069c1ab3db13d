int acceptance_placeholder_test_tessellate;
