#include <cstdio>
int main() { std::puts("folia: placeholder"); return 0; }
