#include <cstdio>
int main() { std::puts("torus-zeta: work in progress"); return 0; }
