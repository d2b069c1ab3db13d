int acceptance_placeholder_test_tip_solver;
